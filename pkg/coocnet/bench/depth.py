from __future__ import annotations

import typing as t

import pandas as pd

from ..index import InvertedIndex
from ..processing import buildBfs
from ..structures import ExpandParams, FilterConditions, Term, edgeJaccard

__all__ = ["depthSensitivity"]

DEPTH_COLUMNS = ["seed", "depth_a", "depth_b", "jaccard"]


def depthSensitivity(
    index: InvertedIndex,
    seeds: t.Sequence[Term],
    depths: t.Sequence[int],
    branch: int,
    limit: int,
    minDf=1,
) -> pd.DataFrame:
    """
    How much the strongest ``limit`` edges move as the search depth grows. For each
    seed, graphs are built at every depth and the Jaccard similarity of the top
    edge sets is reported for consecutive depths.
    """
    depths = sorted(set(depths))
    if len(depths) < 2:
        raise ValueError(f"At least two distinct depths are needed, got {depths}")
    rows = []
    for seed in seeds:
        cond = FilterConditions({seed})
        graphs = [buildBfs(index, cond, ExpandParams(d, branch, minDf)) for d in depths]
        for (depthA, graphA), (depthB, graphB) in zip(
            zip(depths, graphs), zip(depths[1:], graphs[1:])
        ):
            rows.append((seed, depthA, depthB, edgeJaccard(graphA, graphB, limit)))
    return pd.DataFrame(rows, columns=DEPTH_COLUMNS)
