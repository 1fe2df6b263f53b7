from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

from .typeoverloads import Term, UnknownFieldError
from ..constants import COOC_ENUMS

__all__ = ["FilterConditions", "ExpandParams"]


@dataclass(frozen=True)
class FilterConditions:
    """
    Conjunctive document query: every term in ``terms`` must occur, and every
    ``metaFilters`` field must equal its label. Both may be empty, in which case
    every document matches.
    """

    terms: t.FrozenSet[Term] = frozenset()
    metaFilters: t.Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.terms, str):
            raise TypeError("`terms` must be a collection of terms, not a string")
        object.__setattr__(self, "terms", frozenset(self.terms))
        object.__setattr__(self, "metaFilters", dict(self.metaFilters))
        unknown = set(self.metaFilters).difference(COOC_ENUMS.META_FIELDS)
        if unknown:
            raise UnknownFieldError(
                f"Unknown metadata filter field(s) {sorted(unknown)}. "
                f"Must be one of {', '.join(COOC_ENUMS.META_FIELDS)}"
            )

    def withTerm(self, term: Term) -> FilterConditions:
        return FilterConditions(self.terms | {term}, self.metaFilters)

    def key(self) -> t.Tuple[Term, ...]:
        """Canonical identity of the term part of these conditions"""
        return tuple(sorted(self.terms))


@dataclass(frozen=True)
class ExpandParams:
    depth: int = 2
    branch: int = 5
    minDf: int = 1

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"Search depth must be >= 1, was {self.depth}")
        if self.branch < 1:
            raise ValueError(f"Branch width must be >= 1, was {self.branch}")
        if self.minDf < 0:
            raise ValueError(
                f"Minimum document frequency must be >= 0, was {self.minDf}"
            )
