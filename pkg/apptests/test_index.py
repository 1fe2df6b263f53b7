import pytest

from apptests.helperclasses import CorpusTester, bruteForceMatch
from apptests.testingconsts import NUM_RANDOM_CORPORA, RND
from coocnet.constants import COOC_ENUMS
from coocnet.index import Posting, buildIndex
from coocnet.structures import (
    Document,
    DuplicateDocError,
    FilterConditions,
    TokenizerConfig,
    UnknownDocError,
    UnknownFieldError,
)


def test_lexicon(c3Index):
    assert {term: entry.df for term, entry in c3Index.lexicon.items()} == {
        "a": 2,
        "b": 3,
        "c": 2,
    }
    # Term ids follow sorted term order
    assert [c3Index.lexicon[t].termId for t in "abc"] == [0, 1, 2]
    assert c3Index.docCount == 3


def test_empty_corpus(defaultCfg):
    index = buildIndex([], defaultCfg)
    assert index.docCount == 0
    assert index.lexicon == {}
    assert index.matchDocs(FilterConditions()) == set()
    assert index.dfHistogram() == []


def test_repeated_token(defaultCfg):
    index = buildIndex([Document("D1", title="a x a")], defaultCfg)
    (posting,) = index.postings("a")
    assert posting.tf == 2 and posting.positions == (0, 2)


def test_duplicate_doc(defaultCfg):
    with pytest.raises(DuplicateDocError):
        buildIndex([Document("D1"), Document("D1")], defaultCfg)


def test_postings(c3Index):
    assert [p.docId for p in c3Index.postings("b")] == ["D1", "D2", "D3"]
    assert c3Index.postings("zzz") == []
    postings = c3Index.postings("a")
    assert len(postings) == 2 and all(p.tf == 1 for p in postings)


@pytest.mark.parametrize(
    "args",
    [("D1", 0, ()), ("D1", 2, (1,)), ("D1", 2, (3, 3)), ("D1", 1, (-1,))],
)
def test_bad_posting(args):
    with pytest.raises(ValueError):
        Posting(*args)


@pytest.mark.parametrize(
    "terms, expected",
    [({"a"}, {"D1", "D2"}), (set(), {"D1", "D2", "D3"}), ({"a", "c"}, {"D1"})],
)
def test_match_docs(c3Index, terms, expected):
    assert c3Index.matchDocs(FilterConditions(terms)) == expected


def test_match_docs_meta(defaultCfg):
    corpus = [
        Document("D1", title="a b", discipline="physics", category="article"),
        Document("D2", title="a", discipline="biology", category="article"),
        Document("D3", title="b", discipline="physics", category="review"),
    ]
    index = buildIndex(corpus, defaultCfg)
    physics = {COOC_ENUMS.META_DISCIPLINE: "physics"}
    assert index.matchDocs(FilterConditions(metaFilters=physics)) == {"D1", "D3"}
    assert index.matchDocs(FilterConditions({"a"}, physics)) == {"D1"}
    both = {**physics, COOC_ENUMS.META_CATEGORY: "review"}
    assert index.matchDocs(FilterConditions(metaFilters=both)) == {"D3"}
    unseen = {COOC_ENUMS.META_DISCIPLINE: "history"}
    assert index.matchDocs(FilterConditions(metaFilters=unseen)) == set()


def test_unknown_meta_field():
    with pytest.raises(UnknownFieldError):
        FilterConditions(metaFilters={"journal": "x"})


def test_string_terms_rejected():
    with pytest.raises(TypeError):
        FilterConditions("ab")


@pytest.mark.parametrize(
    "docs, expected",
    [
        ({"D1", "D2"}, {"a": 2, "b": 2, "c": 1}),
        (set(), {}),
        ({"D3"}, {"b": 1, "c": 1}),
        ({"D1", "D2", "D3"}, {"a": 2, "b": 3, "c": 2}),
    ],
)
def test_term_doc_frequencies(c3Index, docs, expected):
    assert c3Index.termDocFrequencies(docs) == expected


def test_term_doc_frequencies_unknown_doc(c3Index):
    with pytest.raises(UnknownDocError, match="D9"):
        c3Index.termDocFrequencies({"D1", "D9"})


@pytest.mark.parametrize(
    "docs, k, exclude, expected",
    [
        ({"D1", "D2"}, 2, {"a"}, [("b", 2), ("c", 1)]),
        ({"D1", "D2"}, 5, {"a", "b", "c"}, []),
        ({"D1", "D2", "D3"}, 1, set(), [("b", 3)]),
        ({"D1", "D2", "D3"}, 5, {"zzz"}, [("b", 3), ("a", 2), ("c", 2)]),
        (set(), 3, set(), []),
    ],
)
def test_top_k_terms(c3Index, docs, k, exclude, expected):
    assert c3Index.topKTerms(docs, k, exclude) == expected


def test_top_k_min_df(c3Index):
    allDocs = set(c3Index.docIds)
    assert c3Index.topKTerms(allDocs, 5, minDf=3) == [("b", 3)]
    assert c3Index.topKTerms({"D1"}, 5, minDf=0) == c3Index.topKTerms({"D1"}, 5)
    with pytest.raises(ValueError):
        c3Index.topKTerms(allDocs, 0)


def test_df_histogram(c3Index, defaultCfg):
    assert c3Index.dfHistogram() == [(2, 2), (3, 1)]
    single = buildIndex([Document("D1", title="x")], defaultCfg)
    assert single.dfHistogram() == [(1, 1)]


def test_term_df_table(c3Index):
    assert c3Index.termDfTable() == [("a", 2), ("c", 2), ("b", 3)]


def test_random_corpus_invariants(defaultCfg):
    tester = CorpusTester()
    for _ in range(NUM_RANDOM_CORPORA):
        corpus = tester.randomCorpus()
        index = buildIndex(corpus, defaultCfg)
        allDfs = index.termDocFrequencies(index.docIds)
        assert sum(bucket for _, bucket in index.dfHistogram()) == len(index.lexicon)
        assert sum(e.df for e in index.lexicon.values()) == sum(
            meta.numTerms for meta in index.docMeta.values()
        )
        for term, entry in index.lexicon.items():
            postings = index.postings(term)
            assert entry.df == len(postings) == allDfs[term]
            docIds = [p.docId for p in postings]
            assert docIds == sorted(set(docIds))

        cond = tester.randomConditions(corpus)
        matched = index.matchDocs(cond)
        assert matched == bruteForceMatch(corpus, defaultCfg, cond)
        extra = str(RND.choice(sorted(index.lexicon) or ["t00"]))
        assert index.matchDocs(cond.withTerm(extra)) <= matched

        full = sorted(
            index.termDocFrequencies(matched).items(), key=lambda kv: (-kv[1], kv[0])
        )
        k = int(RND.integers(1, 10))
        assert index.topKTerms(matched, k) == full[:k]


def test_dictionary_terms_indexed():
    cfg = TokenizerConfig(userDictionary={"data mining"})
    index = buildIndex([Document("D1", title="data mining rocks")], cfg)
    assert set(index.lexicon) == {"data mining", "rocks"}
