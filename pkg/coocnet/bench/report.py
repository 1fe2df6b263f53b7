from __future__ import annotations

import json
import typing as t
from itertools import combinations
from pathlib import Path

import numpy as np
import pandas as pd
from scipy.stats import t as studentT

from .runner import BenchSample
from .stats import mannWhitneyU, wilcoxonSignedRank
from ..constants import COOC_ENUMS
from ..logger import getAppLogger
from ..structures import CoocError, EmptySampleError, FilePath

__all__ = ["report", "samplesToDataFrame", "summarizeSamples", "boxStats"]

_logger = getAppLogger(__name__)

SAMPLE_COLUMNS = ["algo", "seed", "rep", "wall_time_s", "peak_mem_bytes"]
MEASURES = ["wall_time_s", "peak_mem_bytes"]
# Comparison order, traversal-vs-bfs first
_algoOrder = [COOC_ENUMS.ALGO_TRAVERSAL, COOC_ENUMS.ALGO_BFS, COOC_ENUMS.ALGO_RECURSIVE]


def samplesToDataFrame(samples: t.Sequence[BenchSample]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            (s.algo, s.seedTerm, s.rep, s.wallTimeS, s.peakMemBytes)
            for s in samples
        ],
        columns=SAMPLE_COLUMNS,
    )


def boxStats(values: pd.Series) -> dict:
    """Box-plot numbers plus the mean and its 95% t-interval"""
    values = values.astype(float)
    q1, median, q3 = values.quantile([0.25, 0.5, 0.75]).tolist()
    iqr = q3 - q1
    lowFence, highFence = q1 - 1.5 * iqr, q3 + 1.5 * iqr
    inside = values[(values >= lowFence) & (values <= highFence)]
    numValues = len(values)
    mean = float(values.mean())
    if numValues > 1:
        halfWidth = studentT.ppf(0.975, numValues - 1) * values.std(ddof=1)
        halfWidth /= np.sqrt(numValues)
        ci = [mean - halfWidth, mean + halfWidth]
    else:
        ci = None
    return {
        "n": numValues,
        "mean": mean,
        "ci95": ci,
        "median": median,
        "q1": q1,
        "q3": q3,
        "iqr": iqr,
        "whisker_low": float(inside.min()),
        "whisker_high": float(inside.max()),
        "min": float(values.min()),
        "max": float(values.max()),
        "outliers": int(numValues - len(inside)),
    }


def _compare(df: pd.DataFrame, algoA: str, algoB: str, measure: str) -> dict:
    out = {}
    left = df[df["algo"] == algoA].set_index(["seed", "rep"])[measure]
    right = df[df["algo"] == algoB].set_index(["seed", "rep"])[measure]
    paired = pd.concat([left, right], axis=1, join="inner").to_numpy(float)
    try:
        out[COOC_ENUMS.TEST_WILCOXON] = wilcoxonSignedRank(paired).toDict()
    except CoocError as ex:
        out[COOC_ENUMS.TEST_WILCOXON] = {"error": str(ex)}
    out[COOC_ENUMS.TEST_MANN_WHITNEY] = mannWhitneyU(
        left.to_numpy(float), right.to_numpy(float)
    ).toDict()
    return out


def summarizeSamples(df: pd.DataFrame) -> dict:
    present = [algo for algo in _algoOrder if algo in set(df["algo"])]
    summary = {"samples": len(df), "algorithms": {}, "comparisons": {}}
    for algo in present:
        algoDf = df[df["algo"] == algo]
        summary["algorithms"][algo] = {
            measure: boxStats(algoDf[measure]) for measure in MEASURES
        }
    for algoA, algoB in combinations(present, 2):
        summary["comparisons"][f"{algoA}-vs-{algoB}"] = {
            measure: _compare(df, algoA, algoB, measure) for measure in MEASURES
        }
    return summary


def summaryPathFor(file: FilePath) -> Path:
    file = Path(file)
    return file.with_name(f"{file.stem}.summary.json")


def report(samples: t.Sequence[BenchSample], file: FilePath) -> t.Tuple[Path, Path]:
    """
    Writes ``samples`` as CSV to ``file`` and a JSON summary next to it
    (``<stem>.summary.json``): per-algorithm box-plot statistics for time and memory,
    and Wilcoxon (paired on seed and repetition) plus Mann-Whitney (pooled) results for
    each pair of algorithms.

    Returns
    -------
    tuple
        Paths of the CSV and the summary
    """
    if not samples:
        raise EmptySampleError("Cannot report on an empty sample list")
    file = Path(file)
    df = samplesToDataFrame(samples)
    df.to_csv(file, index=False, encoding="utf-8", lineterminator="\n")

    summaryFile = summaryPathFor(file)
    with open(summaryFile, "w", encoding="utf-8", newline="\n") as ofile:
        json.dump(summarizeSamples(df), ofile, indent=2)
        ofile.write("\n")
    _logger.attention(f"Wrote {len(df)} samples to {file} and summary to {summaryFile}")
    return file, summaryFile
