from __future__ import annotations

import json
import typing as t

import pandas as pd

from .base import CoocExporter
from .importers import EDGE_COLUMNS
from ..logger import getAppLogger
from ..structures import CoocGraph, Document, FilePath

__all__ = ["EdgeCsvExporter", "GraphJsonExporter", "JsonlCorpusExporter"]

_logger = getAppLogger(__name__)


class GraphExporter(CoocExporter):
    """Exports the top edges of a ``CoocGraph``"""

    def populateMetadata(self, limit: int = None, **kwargs):
        """
        Parameters
        ----------
        limit
            Maximum number of edges to export, strongest first. *None* exports all
        """
        return dict(limit=limit, **kwargs)

    def getInstances(self, graph: CoocGraph, limit=None, **kwargs):
        return graph.topEdges(limit)


class EdgeCsvExporter(GraphExporter):
    def createExportObject(self, **kwargs):
        return []

    def updateExportObject(self, inst: tuple, exportObject: list, **kwargs):
        exportObject.append(inst)
        return exportObject

    def formatReturnObject(self, exportObject, **kwargs) -> pd.DataFrame:
        return pd.DataFrame(exportObject, columns=EDGE_COLUMNS)

    def writeFile(self, file: FilePath, exportObject, **kwargs):
        df = self.formatReturnObject(exportObject)
        df.to_csv(file, index=False, encoding="utf-8", lineterminator="\n")
        _logger.info(f"Wrote {len(df)} edges to {file}")


class GraphJsonExporter(GraphExporter):
    def createExportObject(self, **kwargs):
        return {"nodes": [], "edges": []}

    def bulkExport(self, graph: CoocGraph, exportObject: dict, limit=None, **kwargs):
        edges = graph.topEdges(limit)
        incident = {term for u, v, _ in edges for term in (u, v)}
        connected = {term for key in graph.edges for term in key}
        isolatedSeeds = graph.seeds.difference(connected)
        exportObject["nodes"] = sorted(incident | isolatedSeeds)
        exportObject["edges"] = [
            {"source": u, "target": v, "weight": w} for u, v, w in edges
        ]
        return exportObject

    def writeFile(self, file: FilePath, exportObject, **kwargs):
        with open(file, "w", encoding="utf-8", newline="\n") as ofile:
            json.dump(exportObject, ofile, ensure_ascii=False, separators=(",", ":"))
        _logger.info(
            f"Wrote {len(exportObject['nodes'])} nodes and "
            f"{len(exportObject['edges'])} edges to {file}"
        )


class JsonlCorpusExporter(CoocExporter):
    def createExportObject(self, **kwargs):
        return []

    def updateExportObject(self, inst: Document, exportObject: list, **kwargs):
        exportObject.append(json.dumps(inst.toRecord(), ensure_ascii=False))
        return exportObject

    def writeFile(self, file: FilePath, exportObject: t.List[str], **kwargs):
        with open(file, "w", encoding="utf-8", newline="\n") as ofile:
            for line in exportObject:
                ofile.write(line + "\n")
        _logger.info(f"Wrote {len(exportObject)} documents to {file}")
