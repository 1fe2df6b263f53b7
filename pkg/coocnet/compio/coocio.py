from __future__ import annotations

from pathlib import Path

from .base import CoocIOBase
from .exporters import *
from .importers import *
from ..constants import COOC_ENUMS
from ..structures import CoocGraph, Corpus, FilePath

_suffixFormats = {
    ".csv": COOC_ENUMS.EXPORT_EDGE_CSV,
    ".json": COOC_ENUMS.EXPORT_GRAPH_JSON,
}


def _formatToAttributeName(prefix: str, fmt: str):
    return prefix + "".join(part.title() for part in fmt.split("-"))


class CoocIO:
    """
    Registry of every corpus and graph format this package reads or writes. Formats
    are resolved by name (``edge-csv`` -> ``exportEdgeCsv``), so adding a format only
    takes an importer/exporter attribute following that naming.
    """

    corpusFormats = (COOC_ENUMS.CORPUS_JSONL, COOC_ENUMS.CORPUS_CSL_TSV)
    graphFormats = (COOC_ENUMS.EXPORT_EDGE_CSV, COOC_ENUMS.EXPORT_GRAPH_JSON)

    def __init__(self):
        self.importJsonl = JsonlCorpusImporter()
        self.importCslTsv = CslTsvCorpusImporter()
        self.importEdgeCsv = EdgeCsvImporter()
        self.importGraphJson = GraphJsonImporter()

        self.exportJsonl = JsonlCorpusExporter()
        self.exportEdgeCsv = EdgeCsvExporter()
        self.exportGraphJson = GraphJsonExporter()

    def _ioFunctionFromFormat(self, fmt: str, importOrExport: str) -> CoocIOBase:
        attrName = _formatToAttributeName(importOrExport, fmt)
        ioFunc = getattr(self, attrName, None)
        if ioFunc is None:
            raise ValueError(f"No {importOrExport}er is registered for format {fmt!r}")
        return ioFunc

    @staticmethod
    def graphFormatFromSuffix(file: FilePath):
        suffix = Path(file).suffix.lower()
        if suffix not in _suffixFormats:
            raise ValueError(
                f"Cannot infer the graph format of {file}. Expected one of "
                f"{', '.join(_suffixFormats)}"
            )
        return _suffixFormats[suffix]

    def loadCorpus(self, file: FilePath, format=COOC_ENUMS.CORPUS_JSONL) -> Corpus:
        if format not in self.corpusFormats:
            raise ValueError(
                f"Unknown corpus format {format!r}. "
                f"Must be one of {', '.join(self.corpusFormats)}"
            )
        return self._ioFunctionFromFormat(format, "import")(file)

    def writeCorpus(self, corpus: Corpus, file: FilePath):
        return self.exportJsonl(corpus, file)

    def exportGraph(
        self,
        graph: CoocGraph,
        limit: int = None,
        format=COOC_ENUMS.EXPORT_EDGE_CSV,
        file: FilePath = None,
    ):
        """
        Writes the top ``limit`` edges of ``graph`` to ``file`` in ``format``.

        Parameters
        ----------
        graph
            Graph to export
        limit
            Maximum number of edges, strongest first. *None* exports every edge
        format
            ``edge-csv`` (``source,target,weight`` rows) or ``graph-json`` (``nodes``
            and ``edges`` arrays)
        file
            Destination. *None* only returns the export object (a DataFrame for
            edge-csv, a dict for graph-json)
        """
        if format not in self.graphFormats:
            raise ValueError(
                f"Unknown graph format {format!r}. "
                f"Must be one of {', '.join(self.graphFormats)}"
            )
        if limit is not None and limit < 1:
            raise ValueError(f"limit must be >= 1, was {limit}")
        return self._ioFunctionFromFormat(format, "export")(graph, file, limit=limit)

    def importGraph(self, file: FilePath, format: str = None) -> CoocGraph:
        if format is None:
            format = self.graphFormatFromSuffix(file)
        if format not in self.graphFormats:
            raise ValueError(
                f"Unknown graph format {format!r}. "
                f"Must be one of {', '.join(self.graphFormats)}"
            )
        return self._ioFunctionFromFormat(format, "import")(file)


defaultIo = CoocIO()

loadCorpus = defaultIo.loadCorpus
writeCorpus = defaultIo.writeCorpus
exportGraph = defaultIo.exportGraph
importGraph = defaultIo.importGraph
