from __future__ import annotations

import time
import typing as t

import numpy as np

from ..constants import COOC_ENUMS
from ..index import InvertedIndex
from ..logger import getAppLogger
from ..structures import (
    CoocGraph,
    EmptySeedError,
    ExpandParams,
    FilterConditions,
    Term,
)

__all__ = ["buildRecursive", "buildBfs"]

_logger = getAppLogger(__name__)

ConditionKey = t.Tuple[Term, ...]


def _startExpansion(index: InvertedIndex, seed: FilterConditions):
    if not seed.terms:
        raise EmptySeedError(
            "Expansion needs at least one seed term to anchor the first edges"
        )
    graph = CoocGraph(seeds=seed.terms)
    return graph, seed.key(), max(seed.terms), index.matchRows(seed)


def _expandOnce(
    index: InvertedIndex,
    key: ConditionKey,
    anchor: Term,
    rows: np.ndarray,
    p: ExpandParams,
    graph: CoocGraph,
):
    """
    Links ``anchor`` to the ``p.branch`` most frequent words of the documents matching
    ``key`` and yields (word id, word) for each of them. The edge weight is the word's
    df within those documents, i.e. the size of the match for ``key`` plus the word.
    """
    termIds, dfs = index.topKTermIds(rows, p.branch, exclude=key, minDf=p.minDf)
    for termId, df in zip(termIds.tolist(), dfs.tolist()):
        word = index.terms[termId]
        graph.mergeEdge(anchor, word, df, COOC_ENUMS.MERGE_MAX)
        yield termId, word


def _childKey(key: ConditionKey, word: Term) -> ConditionKey:
    return tuple(sorted(key + (word,)))


def _childRows(index: InvertedIndex, rows: np.ndarray, termId: int):
    return np.intersect1d(rows, index.termRows(termId), assume_unique=True)


def buildRecursive(
    index: InvertedIndex,
    seed: FilterConditions,
    p: ExpandParams,
    trace: t.List[ConditionKey] = None,
) -> CoocGraph:
    """
    Depth-first expansion over the inverted index. Each condition set retrieves its
    ``p.branch`` most frequent words, links them to the most recently added condition
    term and then recurses with each word added to the conditions, until ``p.depth``
    levels are done. A condition set (compared as a sorted term tuple) is expanded at
    most once; revisited edges keep their largest weight.

    Parameters
    ----------
    index
        Index to retrieve from
    seed
        Starting conditions. At least one term is required, and the lexicographically
        last term anchors the first level. Metadata filters hold at every level
    p
        Depth, branch width and df floor
    trace
        If given, every expanded condition set is appended in expansion order
    """
    start = time.perf_counter()
    graph, key, anchor, rows = _startExpansion(index, seed)
    visited: t.Set[ConditionKey] = set()
    _recurse(index, key, anchor, rows, 1, p, graph, visited, trace)
    elapsed = time.perf_counter() - start
    _logger.debug("Recursive expansion built %r in %.4fs", graph, elapsed)
    return graph


def _recurse(index, key, anchor, rows, level, p, graph, visited, trace):
    visited.add(key)
    if trace is not None:
        trace.append(key)
    for termId, word in _expandOnce(index, key, anchor, rows, p, graph):
        if level >= p.depth:
            continue
        childKey = _childKey(key, word)
        if childKey in visited:
            continue
        childRows = _childRows(index, rows, termId)
        _recurse(index, childKey, word, childRows, level + 1, p, graph, visited, trace)


def buildBfs(
    index: InvertedIndex,
    seed: FilterConditions,
    p: ExpandParams,
    trace: t.List[ConditionKey] = None,
) -> CoocGraph:
    """
    Breadth-first counterpart of ``buildRecursive`` with the same result: an explicit
    frontier holds the condition sets of one level, and expanding it produces the
    next level's frontier. Sets are marked visited when first generated, and since a
    set's size fixes its level, the first discoverer (and therefore the anchor) is
    the same one depth-first order finds.

    Parameters are as in ``buildRecursive``.
    """
    start = time.perf_counter()
    graph, key, anchor, rows = _startExpansion(index, seed)
    visited = {key}
    frontier = [(key, anchor, rows)]
    for level in range(1, p.depth + 1):
        nextFrontier = []
        for key, anchor, rows in frontier:
            if trace is not None:
                trace.append(key)
            for termId, word in _expandOnce(index, key, anchor, rows, p, graph):
                if level >= p.depth:
                    continue
                childKey = _childKey(key, word)
                if childKey in visited:
                    continue
                visited.add(childKey)
                nextFrontier.append((childKey, word, _childRows(index, rows, termId)))
        frontier = nextFrontier
    elapsed = time.perf_counter() - start
    _logger.debug("BFS expansion built %r in %.4fs", graph, elapsed)
    return graph
