from __future__ import annotations

import typing as t
from dataclasses import dataclass, field
from functools import cached_property

from .typeoverloads import DocId, Term
from ..constants import COOC_ENUMS
from ..generalutils import collapseWhitespace

__all__ = ["Document", "Corpus", "TokenizerConfig", "TokenStream"]


@dataclass(frozen=True)
class Document:
    """
    One corpus record. Text fields may be empty; ``keywords`` may be an empty tuple.
    """

    docId: DocId
    title: str = ""
    abstractText: str = ""
    keywords: t.Tuple[str, ...] = ()
    discipline: str = ""
    category: str = ""

    def __post_init__(self):
        if not isinstance(self.docId, str) or not self.docId:
            raise ValueError(f"doc_id must be a nonempty string, got {self.docId!r}")
        if not isinstance(self.keywords, tuple):
            object.__setattr__(self, "keywords", tuple(self.keywords))

    def meta(self, name: str) -> str:
        if name == COOC_ENUMS.META_DISCIPLINE:
            return self.discipline
        if name == COOC_ENUMS.META_CATEGORY:
            return self.category
        raise KeyError(name)

    def toRecord(self) -> dict:
        """Record layout used by jsonl corpus files"""
        return {
            "doc_id": self.docId,
            "title": self.title,
            "abstract": self.abstractText,
            "keywords": list(self.keywords),
            "discipline": self.discipline,
            "category": self.category,
        }


Corpus = t.List[Document]


@dataclass(frozen=True)
class TokenizerConfig:
    stopwords: t.FrozenSet[str] = frozenset()
    userDictionary: t.FrozenSet[str] = frozenset()
    lowercase: bool = True
    fieldsUsed: t.Tuple[str, ...] = COOC_ENUMS.ALL_FIELDS

    def __post_init__(self):
        stopwords = frozenset(self.stopwords)
        phrases = frozenset(collapseWhitespace(p) for p in self.userDictionary)
        for kind, entries in ("stopword", stopwords), ("dictionary", phrases):
            bad = [e for e in entries if not isinstance(e, str) or not e.strip()]
            if bad:
                raise ValueError(f"Empty {kind} entries are not allowed: {bad}")
        fields = tuple(self.fieldsUsed)
        unknown = [f for f in fields if f not in COOC_ENUMS.ALL_FIELDS]
        if unknown:
            raise ValueError(
                f"Unknown tokenizer field(s) {unknown}. "
                f"Must be a subset of {', '.join(COOC_ENUMS.ALL_FIELDS)}"
            )
        if len(set(fields)) != len(fields):
            raise ValueError(f"Tokenizer fields repeat: {fields}")
        object.__setattr__(self, "stopwords", stopwords)
        object.__setattr__(self, "userDictionary", phrases)
        object.__setattr__(self, "fieldsUsed", fields)

    def normalize(self, text: str) -> str:
        return text.lower() if self.lowercase else text

    @cached_property
    def activeStopwords(self) -> t.FrozenSet[str]:
        return frozenset(self.normalize(word.strip()) for word in self.stopwords)

    @cached_property
    def phraseTable(self) -> t.Dict[str, t.List[t.Tuple[str, ...]]]:
        """
        Multi-token dictionary phrases keyed by their first token, longest first so
        the first hit during matching is the longest match
        """
        table: t.Dict[str, t.List[t.Tuple[str, ...]]] = {}
        for phrase in self.userDictionary:
            parts = tuple(self.normalize(phrase).split())
            if len(parts) < 2:
                continue
            table.setdefault(parts[0], []).append(parts)
        for candidates in table.values():
            candidates.sort(key=lambda parts: (-len(parts), parts))
        return table


@dataclass(frozen=True)
class TokenStream:
    tokens: t.Tuple[t.Tuple[Term, int], ...] = field(default_factory=tuple)

    @property
    def terms(self) -> t.List[Term]:
        return [term for term, _ in self.tokens]

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)
