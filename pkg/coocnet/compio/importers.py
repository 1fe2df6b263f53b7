from __future__ import annotations

import json
import typing as t

import pandas as pd

from .base import CoocImporter, asFilePath, checkExists
from ..constants import COOC_ENUMS
from ..generalutils import collapseWhitespace, splitKeywords
from ..logger import getAppLogger
from ..structures import (
    CoocGraph,
    Corpus,
    CorpusParseError,
    Document,
    DuplicateDocError,
    FilePath,
    GraphParseError,
)

__all__ = [
    "LineRecordImporter",
    "JsonlCorpusImporter",
    "CslTsvCorpusImporter",
    "GraphJsonImporter",
    "EdgeCsvImporter",
    "readUtf8Lines",
    "loadStopwords",
    "loadDictionary",
]

_logger = getAppLogger(__name__)

EDGE_COLUMNS = ["source", "target", "weight"]


def readUtf8Lines(file: FilePath) -> t.List[str]:
    """
    Splits a UTF-8 file on ``\\n`` only, so separators that ``str.splitlines`` would
    honor (form feeds, U+2028, ...) stay inside their record. Decoding errors name the
    offending line.
    """
    file = asFilePath(file)
    checkExists(file)
    with open(file, "rb") as ifile:
        raw = ifile.read()
    lines = []
    for lineNumber, rawLine in enumerate(raw.split(b"\n"), start=1):
        try:
            lines.append(rawLine.decode("utf-8").rstrip("\r"))
        except UnicodeDecodeError as ex:
            raise CorpusParseError(
                f"Invalid UTF-8 ({ex.reason})", file, lineNumber
            ) from None
    return lines


class LineRecordImporter(CoocImporter):
    """Corpus formats that store one document per line"""

    def readFile(self, file: FilePath, **kwargs):
        return readUtf8Lines(file)

    def getInstances(self, importObject, **kwargs):
        for lineNumber, line in enumerate(importObject, start=1):
            if line.strip():
                yield lineNumber, line

    def finalizeImport(self, parsed, file=None, **kwargs) -> Corpus:
        corpus = []
        seen = set()
        for lineNumber, doc in parsed:
            if doc.docId in seen:
                raise DuplicateDocError(doc.docId, lineNumber)
            seen.add(doc.docId)
            corpus.append(doc)
        _logger.info(f"Loaded {len(corpus)} documents from {file or 'memory'}")
        return corpus


class JsonlCorpusImporter(LineRecordImporter):
    textFields = {
        "title": "title",
        "abstract": "abstractText",
        "discipline": "discipline",
        "category": "category",
    }
    """Record key -> ``Document`` attribute for every optional string field"""

    def formatSingleInstance(self, inst, file=None, **kwargs):
        lineNumber, line = inst

        def fail(msg):
            return CorpusParseError(msg, file, lineNumber)

        try:
            record = json.loads(line)
        except json.JSONDecodeError as ex:
            raise fail(f"Malformed JSON ({ex.msg})") from None
        if not isinstance(record, dict):
            raise fail("Record must be a JSON object")
        docId = record.get("doc_id")
        if not isinstance(docId, str) or not docId:
            raise fail('Missing or empty "doc_id" string')

        docKwargs = {}
        for key, attr in self.textFields.items():
            value = record.get(key)
            if value is None:
                value = ""
            if not isinstance(value, str):
                raise fail(f'Field "{key}" must be a string')
            docKwargs[attr] = value

        keywords = record.get("keywords")
        if keywords is None:
            keywords = []
        elif isinstance(keywords, str):
            keywords = splitKeywords(keywords)
        elif not isinstance(keywords, list) or not all(
            isinstance(kw, str) for kw in keywords
        ):
            raise fail('Field "keywords" must be an array of strings')
        return lineNumber, Document(docId, keywords=tuple(keywords), **docKwargs)


class CslTsvCorpusImporter(LineRecordImporter):
    columns = ("title", "abstract", "keywords", "discipline", "category")

    def formatSingleInstance(self, inst, file=None, **kwargs):
        lineNumber, line = inst
        cells = line.split("\t")
        if len(cells) != len(self.columns):
            raise CorpusParseError(
                f"Expected {len(self.columns)} tab-separated columns "
                f"({', '.join(self.columns)}), found {len(cells)}",
                file,
                lineNumber,
            )
        title, abstractText, keywords, discipline, category = cells
        doc = Document(
            f"L{lineNumber}",
            title=title,
            abstractText=abstractText,
            keywords=tuple(splitKeywords(keywords)),
            discipline=discipline.strip(),
            category=category.strip(),
        )
        return lineNumber, doc


class GraphJsonImporter(CoocImporter):
    def readFile(self, file: FilePath, **kwargs):
        try:
            with open(file, "r", encoding="utf-8") as ifile:
                return json.load(ifile)
        except (json.JSONDecodeError, UnicodeDecodeError) as ex:
            raise GraphParseError(f"Not a graph-json file ({ex})") from None

    def bulkImport(self, importObject, **kwargs) -> CoocGraph:
        if not isinstance(importObject, dict) or not {"nodes", "edges"}.issubset(
            importObject
        ):
            raise GraphParseError('Graph JSON needs "nodes" and "edges" arrays')
        try:
            edges = [
                (str(edge["source"]), str(edge["target"]), int(edge["weight"]))
                for edge in importObject["edges"]
            ]
            nodes = [str(node) for node in importObject["nodes"]]
        except (KeyError, TypeError, ValueError) as ex:
            raise GraphParseError(f"Malformed graph-json content ({ex!r})") from None
        incident = {term for u, v, _ in edges for term in (u, v)}
        graph = CoocGraph(seeds=[node for node in nodes if node not in incident])
        for u, v, weight in edges:
            graph.mergeEdge(u, v, weight, COOC_ENUMS.MERGE_MAX)
        return graph


class EdgeCsvImporter(CoocImporter):
    def readFile(self, file: FilePath, **kwargs) -> pd.DataFrame:
        try:
            return pd.read_csv(file, dtype=str, na_filter=False, encoding="utf-8")
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as ex:
            raise GraphParseError(f"Not an edge-csv file ({ex})") from None

    def bulkImport(self, importObject: pd.DataFrame, **kwargs) -> CoocGraph:
        if list(importObject.columns) != EDGE_COLUMNS:
            raise GraphParseError(
                f"Edge CSV header must be {','.join(EDGE_COLUMNS)}, "
                f"found {','.join(map(str, importObject.columns))}"
            )
        try:
            weights = importObject["weight"].astype(int)
        except ValueError as ex:
            raise GraphParseError(f"Non-integer edge weight ({ex})") from None
        graph = CoocGraph()
        sources, targets = importObject["source"], importObject["target"]
        for u, v, weight in zip(sources, targets, weights):
            graph.mergeEdge(u, v, int(weight), COOC_ENUMS.MERGE_MAX)
        return graph


def loadStopwords(file: FilePath) -> t.Set[str]:
    """One term per line. Blank lines and lines starting with ``#`` are ignored."""
    stopwords = set()
    for line in readUtf8Lines(file):
        line = line.strip()
        if line and not line.startswith("#"):
            stopwords.add(line)
    return stopwords


def loadDictionary(file: FilePath) -> t.Set[str]:
    """One phrase per line, inner whitespace collapsed to single spaces"""
    return {collapseWhitespace(line) for line in readUtf8Lines(file) if line.strip()}
