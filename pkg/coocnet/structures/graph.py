from __future__ import annotations

import heapq
import typing as t

from .typeoverloads import EdgeKey, SelfLoopError, Term
from ..constants import COOC_ENUMS
from ..generalutils import canonicalPair

__all__ = ["CoocGraph", "edgeJaccard"]

_policies = (COOC_ENUMS.MERGE_MAX, COOC_ENUMS.MERGE_SUM)


class CoocGraph:
    """
    Undirected weighted term graph. Edges are keyed by the canonical pair (smaller
    term first), so symmetry holds by construction. A graph is written by one builder
    and treated as read-only afterwards.

    ``seeds`` records the terms a construction started from. They are kept as nodes
    even when no edge reaches them, and exports keep them when isolated.
    """

    def __init__(self, seeds: t.Iterable[Term] = ()):
        self.seeds: t.FrozenSet[Term] = frozenset(seeds)
        self.nodes: t.Set[Term] = set(self.seeds)
        self.edges: t.Dict[EdgeKey, int] = {}

    def addNode(self, term: Term):
        self.nodes.add(term)
        return self

    def mergeEdge(self, u: Term, v: Term, weight: int, policy=COOC_ENUMS.MERGE_SUM):
        """
        Adds ``weight`` to the (u, v) edge, combining with an existing weight according
        to ``policy``: *sum* accumulates counts, *max* keeps the larger weight.
        """
        if policy not in _policies:
            raise ValueError(
                f"Unknown merge policy {policy!r}. Must be one of {_policies}"
            )
        if u == v:
            raise SelfLoopError(f'Self-loop on "{u}" is not a valid co-occurrence')
        if weight < 1:
            raise ValueError(f"Edge weights must be >= 1, was {weight}")
        key = canonicalPair(u, v)
        old = self.edges.get(key)
        if old is None:
            self.edges[key] = weight
            self.nodes.update(key)
        elif policy == COOC_ENUMS.MERGE_SUM:
            self.edges[key] = old + weight
        elif weight > old:
            self.edges[key] = weight
        return self

    def weight(self, u: Term, v: Term) -> int:
        if u == v:
            return 0
        return self.edges.get(canonicalPair(u, v), 0)

    def topEdges(self, limit: int = None) -> t.List[t.Tuple[Term, Term, int]]:
        """
        Edges ordered by weight (descending), then endpoints (ascending). ``limit``
        truncates the list; *None* keeps every edge.
        """
        if limit is not None and limit < 1:
            raise ValueError(f"limit must be >= 1, was {limit}")
        sortKey = lambda item: (-item[1], item[0])
        if limit is None or limit >= len(self.edges):
            ordered = sorted(self.edges.items(), key=sortKey)
        else:
            ordered = heapq.nsmallest(limit, self.edges.items(), key=sortKey)
        return [(u, v, w) for (u, v), w in ordered]

    @property
    def numEdges(self):
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, CoocGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __repr__(self):
        return (
            f"{type(self).__name__}(nodes={len(self.nodes)}, edges={len(self.edges)}, "
            f"seeds={sorted(self.seeds)})"
        )


def edgeJaccard(a: CoocGraph, b: CoocGraph, limit: int = None) -> float:
    """Jaccard similarity of the top-``limit`` edge key sets of two graphs"""
    keysA = {(u, v) for u, v, _ in a.topEdges(limit)}
    keysB = {(u, v) for u, v, _ in b.topEdges(limit)}
    union = keysA | keysB
    if not union:
        return 1.0
    return len(keysA & keysB) / len(union)
