from __future__ import annotations

import typing as t
from os import PathLike
from pathlib import Path

__all__ = [
    "FilePath",
    "DocId",
    "Term",
    "EdgeKey",
    "CoocError",
    "CorpusParseError",
    "GraphParseError",
    "DuplicateDocError",
    "UnknownDocError",
    "UnknownFieldError",
    "CorpusIndexMismatchError",
    "SnapshotError",
    "SnapshotFormatError",
    "SnapshotVersionError",
    "SnapshotChecksumError",
    "SelfLoopError",
    "EmptySeedError",
    "UnknownSeedError",
    "DegenerateDataError",
    "EmptySampleError",
    "AllocationHookError",
]

"""
Plain strings and tuples carry most of the data in this package. Naming them makes
signatures say whether a string is a document identifier or a term, and whether a
tuple is an edge key.
"""

FilePath = t.Union[str, Path, PathLike]
DocId = str
Term = str
EdgeKey = t.Tuple[Term, Term]


class CoocError(ValueError):
    """Base for every domain error raised by this package"""


class CorpusParseError(CoocError):
    def __init__(self, msg=None, file: FilePath = None, lineNumber: int = None):
        self.fileName = file
        self.lineNumber = lineNumber
        if lineNumber is not None:
            msg = f"line {lineNumber}: {msg}"
        if file is not None:
            msg = f"{file}: {msg}"
        super().__init__(msg)


class GraphParseError(CoocError):
    pass


class DuplicateDocError(CoocError):
    def __init__(self, docId: DocId, lineNumber: int = None):
        self.docId = docId
        msg = f'Duplicate doc_id "{docId}"'
        if lineNumber is not None:
            msg += f" on line {lineNumber}"
        super().__init__(msg)


class UnknownDocError(CoocError):
    def __init__(self, docIds: t.Iterable[DocId]):
        self.docIds = sorted(docIds)
        shown = ", ".join(self.docIds[:5])
        if len(self.docIds) > 5:
            shown += ", ..."
        super().__init__(f"Unknown doc_id(s) not in the index: {shown}")


class UnknownFieldError(CoocError):
    pass


class CorpusIndexMismatchError(CoocError):
    pass


class SnapshotError(CoocError):
    pass


class SnapshotFormatError(SnapshotError):
    pass


class SnapshotVersionError(SnapshotError):
    pass


class SnapshotChecksumError(SnapshotError):
    pass


class SelfLoopError(CoocError):
    pass


class EmptySeedError(CoocError):
    pass


class UnknownSeedError(CoocError):
    def __init__(self, seeds: t.Iterable[Term]):
        self.seeds = list(seeds)
        super().__init__(
            "Seed term(s) not in the index lexicon: " + ", ".join(self.seeds)
        )


class DegenerateDataError(CoocError):
    pass


class EmptySampleError(CoocError):
    pass


class AllocationHookError(CoocError):
    pass
