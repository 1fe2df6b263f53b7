from __future__ import annotations

import typing as t
from itertools import combinations, product

import numpy as np
from scipy.stats import rankdata

from apptests.testingconsts import RND
from coocnet.constants import COOC_ENUMS
from coocnet.corpus import tokenize
from coocnet.index import InvertedIndex
from coocnet.structures import Corpus, Document, FilterConditions, TokenizerConfig


class CorpusTester:
    """Factory for small random corpora with a tiny vocabulary so terms collide"""

    disciplines = ["physics", "biology", "history"]
    categories = ["article", "review"]

    def __init__(self, maxDocs=100, maxVocab=30, maxLen=12, rng=RND):
        self.maxDocs = maxDocs
        self.maxVocab = maxVocab
        self.maxLen = maxLen
        self.rng = rng

    def randomCorpus(self, numDocs: int = None, vocabSize: int = None) -> Corpus:
        rng = self.rng
        if numDocs is None:
            numDocs = int(rng.integers(1, self.maxDocs + 1))
        if vocabSize is None:
            vocabSize = int(rng.integers(2, self.maxVocab + 1))
        vocab = [f"t{ii:02d}" for ii in range(vocabSize)]
        corpus = []
        for ii in range(numDocs):
            length = int(rng.integers(0, self.maxLen + 1))
            words = rng.choice(vocab, size=length)
            corpus.append(
                Document(
                    f"R{ii:03d}",
                    title=" ".join(words),
                    discipline=str(rng.choice(self.disciplines)),
                    category=str(rng.choice(self.categories)),
                )
            )
        return corpus

    def randomConditions(self, corpus: Corpus, maxTerms=2) -> FilterConditions:
        rng = self.rng
        vocab = sorted({w for doc in corpus for w in doc.title.split()}) or ["t00"]
        numTerms = int(rng.integers(0, maxTerms + 1))
        terms = set(rng.choice(vocab, size=numTerms).tolist()) if numTerms else set()
        metaFilters = {}
        if rng.random() < 0.3:
            metaFilters[COOC_ENUMS.META_DISCIPLINE] = str(rng.choice(self.disciplines))
        return FilterConditions(terms, metaFilters)


def bruteForceMatch(
    corpus: Corpus, cfg: TokenizerConfig, cond: FilterConditions
) -> t.Set[str]:
    matched = set()
    for doc in corpus:
        terms = set(tokenize(doc, cfg).terms)
        if not cond.terms.issubset(terms):
            continue
        if all(doc.meta(name) == label for name, label in cond.metaFilters.items()):
            matched.add(doc.docId)
    return matched


def bruteForceTraversalEdges(
    index: InvertedIndex, cond: FilterConditions
) -> t.Dict[t.Tuple[str, str], int]:
    """Pair weights from intersecting posting doc sets inside the matched documents"""
    matched = index.matchDocs(cond)
    docSets = {
        term: {post.docId for post in index.postings(term)} & matched
        for term in index.lexicon
    }
    edges = {}
    for u, v in combinations(sorted(docSets), 2):
        weight = len(docSets[u] & docSets[v])
        if weight:
            edges[(u, v)] = weight
    return edges


def _twoSided(nullValues: np.ndarray, observed) -> float:
    lower = np.mean(nullValues <= observed + 1e-9)
    upper = np.mean(nullValues >= observed - 1e-9)
    return min(1.0, 2 * min(lower, upper))


def bruteForceWilcoxonP(diffs: t.Sequence[float]) -> float:
    diffs = np.asarray(diffs, dtype=float)
    diffs = diffs[diffs != 0]
    ranks = rankdata(np.abs(diffs))
    observed = ranks[diffs > 0].sum()
    nullValues = np.array(
        [
            sum(r for r, positive in zip(ranks, signs) if positive)
            for signs in product([False, True], repeat=len(ranks))
        ]
    )
    return _twoSided(nullValues, observed)


def bruteForceMannWhitneyP(a: t.Sequence[float], b: t.Sequence[float]) -> float:
    pooled = np.concatenate([a, b]).astype(float)
    ranks = rankdata(pooled)
    observed = ranks[: len(a)].sum()
    nullValues = np.array(
        [ranks[list(group)].sum() for group in combinations(range(len(pooled)), len(a))]
    )
    return _twoSided(nullValues, observed)
