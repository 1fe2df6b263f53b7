from __future__ import annotations

import typing as t
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from ..corpus import tokenize
from ..logger import getAppLogger
from ..structures import (
    Corpus,
    DocId,
    DuplicateDocError,
    FilterConditions,
    Term,
    TokenizerConfig,
    UnknownDocError,
)

__all__ = ["Posting", "LexiconEntry", "DocMeta", "InvertedIndex", "buildIndex"]

_logger = getAppLogger(__name__)

_emptyRows = np.empty(0, dtype=np.int64)


@dataclass(frozen=True)
class Posting:
    docId: DocId
    tf: int
    positions: t.Tuple[int, ...]

    def __post_init__(self):
        positions = tuple(self.positions)
        object.__setattr__(self, "positions", positions)
        if self.tf < 1 or self.tf != len(positions):
            raise ValueError(
                f"Posting for {self.docId} has tf={self.tf} but "
                f"{len(positions)} positions"
            )
        if positions[0] < 0 or any(
            nxt <= prev for prev, nxt in zip(positions, positions[1:])
        ):
            raise ValueError(
                f"Positions must be nonnegative and increasing: {positions}"
            )


@dataclass(frozen=True)
class LexiconEntry:
    termId: int
    df: int


@dataclass(frozen=True)
class DocMeta:
    discipline: str = ""
    category: str = ""
    numTerms: int = 0
    """Distinct terms in the document"""

    def meta(self, name: str) -> str:
        return getattr(self, name)


class InvertedIndex:
    """
    Lexicon plus inverted lists over a tokenized corpus.

    Term ids are ranks in sorted term order and document rows follow sorted doc id
    order, so both "term ascending" and "doc id ascending" orders are plain integer
    orders. Next to the postings the index keeps columnar copies used for retrieval
    and aggregation:

      * one sorted row array per term, intersected to answer conjunctive queries
      * a sparse doc x term incidence matrix, summed over matched rows for document
        frequencies

    Both are derived from the postings and rebuilt whenever an index is created. A
    built index is never mutated.
    """

    def __init__(
        self,
        docMeta: t.Dict[DocId, DocMeta],
        postingLists: t.Dict[Term, t.List[Posting]],
    ):
        self.docIds: t.Tuple[DocId, ...] = tuple(sorted(docMeta))
        self.docMeta = {docId: docMeta[docId] for docId in self.docIds}
        terms = sorted(postingLists)
        self.postingLists = {term: list(postingLists[term]) for term in terms}
        self.lexicon = {
            term: LexiconEntry(termId, len(self.postingLists[term]))
            for termId, term in enumerate(terms)
        }
        self.terms = np.array(terms, dtype=object)

        self._docIdArray = np.array(self.docIds, dtype=object)
        self._docRows = {docId: row for row, docId in enumerate(self.docIds)}
        self._allRows = np.arange(len(self.docIds), dtype=np.int64)
        self._termRows: t.List[np.ndarray] = [
            np.fromiter(
                (self._docRows[post.docId] for post in self.postingLists[term]),
                dtype=np.int64,
                count=len(self.postingLists[term]),
            )
            for term in terms
        ]
        self._dfAll = np.array(
            [len(rows) for rows in self._termRows], dtype=np.int64
        )
        if terms:
            rowIdx = np.concatenate(self._termRows)
            colIdx = np.repeat(np.arange(len(terms)), self._dfAll)
        else:
            rowIdx = colIdx = _emptyRows
        self._incidence = sparse.csr_matrix(
            (np.ones(len(rowIdx), dtype=np.int8), (rowIdx, colIdx)),
            shape=(len(self.docIds), len(terms)),
        )
        self._metaRows: t.Dict[t.Tuple[str, str], np.ndarray] = {}
        for row, docId in enumerate(self.docIds):
            meta = self.docMeta[docId]
            for name in ("discipline", "category"):
                self._metaRows.setdefault((name, meta.meta(name)), []).append(row)
        self._metaRows = {
            key: np.array(rows, dtype=np.int64) for key, rows in self._metaRows.items()
        }

    @property
    def docCount(self):
        return len(self.docIds)

    def __eq__(self, other):
        if not isinstance(other, InvertedIndex):
            return NotImplemented
        return (
            self.docMeta == other.docMeta and self.postingLists == other.postingLists
        )

    def __repr__(self):
        return f"{type(self).__name__}(docs={self.docCount}, terms={len(self.lexicon)})"

    # -----
    # Row-level helpers shared by the graph builders
    # -----
    def termRows(self, termId: int) -> np.ndarray:
        return self._termRows[termId]

    def docIdsAt(self, rows: np.ndarray) -> t.List[DocId]:
        return self._docIdArray[rows].tolist()

    def rowsOf(self, docs: t.Iterable[DocId]) -> np.ndarray:
        docs = set(docs)
        unknown = docs.difference(self._docRows)
        if unknown:
            raise UnknownDocError(unknown)
        rows = np.fromiter((self._docRows[d] for d in docs), np.int64, len(docs))
        return np.sort(rows)

    def matchRows(self, cond: FilterConditions) -> np.ndarray:
        """
        Sorted rows of documents satisfying every condition. Row lists are intersected
        smallest first, so the cost is bounded by the rarest condition.
        """
        rowLists = []
        for term in cond.terms:
            entry = self.lexicon.get(term)
            if entry is None:
                return _emptyRows
            rowLists.append(self._termRows[entry.termId])
        for name, label in cond.metaFilters.items():
            rowLists.append(self._metaRows.get((name, label), _emptyRows))
        if not rowLists:
            return self._allRows
        rowLists.sort(key=len)
        rows = rowLists[0]
        for other in rowLists[1:]:
            if not len(rows):
                break
            rows = np.intersect1d(rows, other, assume_unique=True)
        return rows

    def termDfArray(self, rows: np.ndarray) -> np.ndarray:
        """Document frequency of every term id within ``rows``"""
        if len(rows) == self.docCount:
            return self._dfAll.copy()
        return np.bincount(
            self._incidence[rows].indices, minlength=len(self.terms)
        ).astype(np.int64)

    def topKTermIds(
        self,
        rows: np.ndarray,
        k: int,
        exclude: t.Iterable[Term] = (),
        minDf=1,
    ) -> t.Tuple[np.ndarray, np.ndarray]:
        """
        Term ids (and their dfs) of the ``k`` most frequent terms within ``rows``,
        ordered by df descending then term ascending. Terms absent from ``rows`` are
        never returned, whatever ``minDf`` says.
        """
        if k < 1:
            raise ValueError(f"k must be >= 1, was {k}")
        if not len(rows):
            return _emptyRows, _emptyRows
        dfs = self.termDfArray(rows)
        keep = dfs >= max(minDf, 1)
        excludeIds = [
            self.lexicon[term].termId for term in exclude if term in self.lexicon
        ]
        keep[excludeIds] = False
        candidates = np.flatnonzero(keep)
        if len(candidates) > k:
            # Only the k best need ordering, so drop everything below the k-th df first
            kth = len(candidates) - k
            kthDf = np.partition(dfs[candidates], kth)[kth]
            candidates = candidates[dfs[candidates] >= kthDf]
        order = np.lexsort((candidates, -dfs[candidates]))[:k]
        ids = candidates[order]
        return ids, dfs[ids]

    # -----
    # Public query/aggregate surface
    # -----
    def postings(self, term: Term) -> t.List[Posting]:
        return list(self.postingLists.get(term, ()))

    def matchDocs(self, cond: FilterConditions) -> t.Set[DocId]:
        return set(self.docIdsAt(self.matchRows(cond)))

    def termDocFrequencies(self, docs: t.Iterable[DocId]) -> t.Dict[Term, int]:
        dfs = self.termDfArray(self.rowsOf(docs))
        present = np.flatnonzero(dfs)
        return dict(zip(self.terms[present].tolist(), dfs[present].tolist()))

    def topKTerms(
        self,
        docs: t.Iterable[DocId],
        k: int,
        exclude: t.Iterable[Term] = (),
        minDf=1,
    ) -> t.List[t.Tuple[Term, int]]:
        """
        The ``k`` highest-df terms over ``docs``, excluding ``exclude`` and anything
        below ``minDf``. Ordered by (df descending, term ascending); fewer than ``k``
        entries come back when the vocabulary runs out.
        """
        ids, dfs = self.topKTermIds(self.rowsOf(docs), k, exclude, minDf)
        return list(zip(self.terms[ids].tolist(), dfs.tolist()))

    def dfHistogram(self) -> t.List[t.Tuple[int, int]]:
        """(document frequency, number of terms with that df), df ascending"""
        if not len(self._dfAll):
            return []
        dfs, counts = np.unique(self._dfAll, return_counts=True)
        return list(zip(dfs.tolist(), counts.tolist()))

    def termDfTable(self) -> t.List[t.Tuple[Term, int]]:
        """Every lexicon term with its df, df ascending then term ascending"""
        order = np.lexsort((np.arange(len(self._dfAll)), self._dfAll))
        return list(zip(self.terms[order].tolist(), self._dfAll[order].tolist()))


def buildIndex(corpus: Corpus, cfg: TokenizerConfig) -> InvertedIndex:
    """
    Tokenizes every document of ``corpus`` with ``cfg`` and records each (doc, term)
    occurrence with its term frequency and positions.
    """
    docMeta: t.Dict[DocId, DocMeta] = {}
    for doc in corpus:
        if doc.docId in docMeta:
            raise DuplicateDocError(doc.docId)
        docMeta[doc.docId] = None

    postingLists: t.Dict[Term, t.List[Posting]] = {}
    for doc in sorted(corpus, key=lambda d: d.docId):
        positionsByTerm: t.Dict[Term, t.List[int]] = {}
        for term, position in tokenize(doc, cfg):
            positionsByTerm.setdefault(term, []).append(position)
        for term, positions in positionsByTerm.items():
            postingLists.setdefault(term, []).append(
                Posting(doc.docId, len(positions), tuple(positions))
            )
        docMeta[doc.docId] = DocMeta(doc.discipline, doc.category, len(positionsByTerm))
    index = InvertedIndex(docMeta, postingLists)
    _logger.info(f"Indexed {index.docCount} documents, {len(index.lexicon)} terms")
    return index
