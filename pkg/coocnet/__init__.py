from __future__ import annotations

__all__ = [
    "__version__",
    "COOC_ENUMS",
    "DEFAULTS",
    "Document",
    "TokenizerConfig",
    "TokenStream",
    "FilterConditions",
    "ExpandParams",
    "CoocGraph",
    "InvertedIndex",
    "CoocIO",
    "defaultIo",
    "loadCorpus",
    "writeCorpus",
    "exportGraph",
    "importGraph",
    "tokenize",
    "generateSyntheticCorpus",
    "buildIndex",
    "saveSnapshot",
    "loadSnapshot",
    "buildTraversal",
    "buildRecursive",
    "buildBfs",
]

__version__ = "0.1.0"

from .compio import CoocIO, defaultIo, exportGraph, importGraph, loadCorpus, writeCorpus
from .constants import COOC_ENUMS, DEFAULTS
from .corpus import generateSyntheticCorpus, tokenize
from .index import InvertedIndex, buildIndex, loadSnapshot, saveSnapshot
from .processing import buildBfs, buildRecursive, buildTraversal
from .structures import (
    CoocGraph,
    Document,
    ExpandParams,
    FilterConditions,
    TokenizerConfig,
    TokenStream,
)
