from __future__ import annotations

import typing as t
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from scipy.stats import norm, rankdata

from ..constants import COOC_ENUMS
from ..structures import DegenerateDataError, EmptySampleError

__all__ = [
    "TestResult",
    "wilcoxonSignedRank",
    "mannWhitneyU",
    "WILCOXON_EXACT_MAX_PAIRS",
    "MANN_WHITNEY_EXACT_MAX_SPLITS",
]

WILCOXON_EXACT_MAX_PAIRS = 20
MANN_WHITNEY_EXACT_MAX_SPLITS = 100_000

_modes = (None, COOC_ENUMS.MODE_EXACT, COOC_ENUMS.MODE_NORMAL)
_tinyP = np.finfo(float).tiny


@dataclass(frozen=True)
class TestResult:
    # Keeps pytest from collecting this class
    __test__ = False

    statistic: float
    pValue: float
    method: str
    mode: str

    def __post_init__(self):
        if not 0 < self.pValue <= 1:
            raise ValueError(f"p-value must be in (0, 1], was {self.pValue}")

    def toDict(self) -> dict:
        return {
            "statistic": self.statistic,
            "p_value": self.pValue,
            "method": self.method,
            "mode": self.mode,
        }


def _checkMode(mode):
    if mode not in _modes:
        raise ValueError(f"Unknown test mode {mode!r}. Must be one of {_modes[1:]}")


def _twoSidedFromCounts(lowerCount, upperCount, total) -> float:
    """Doubled smaller tail of an exact null distribution, capped at 1"""
    return min(1.0, 2 * min(lowerCount, upperCount) / total)


def _tieSum(values: np.ndarray) -> float:
    """Sum of t^3 - t over groups of tied values"""
    _, counts = np.unique(values, return_counts=True)
    counts = counts.astype(float)
    return float(np.sum(counts**3 - counts))


def _normalPValue(observed, mean, variance) -> float:
    if variance <= 0:
        return 1.0
    z = max(0.0, abs(observed - mean) - 0.5) / np.sqrt(variance)
    return float(np.clip(2 * norm.sf(z), _tinyP, 1.0))


def signedRankDistribution(doubledRanks: t.Sequence[int]) -> np.ndarray:
    """
    Number of sign assignments giving each value of the doubled positive rank sum.
    Doubling keeps midranks integral, so index ``s`` counts sums equal to ``s / 2``.
    """
    total = int(sum(doubledRanks))
    counts = np.zeros(total + 1, dtype=float)
    counts[0] = 1
    for rank in doubledRanks:
        shifted = np.zeros_like(counts)
        shifted[rank:] = counts[: total + 1 - rank]
        counts += shifted
    return counts


def wilcoxonSignedRank(
    paired: t.Iterable[t.Tuple[float, float]], mode: str = None
) -> TestResult:
    """
    Wilcoxon signed-rank test on the differences ``x - y``.

    Zero differences are dropped and tied magnitudes get midranks. The statistic is
    ``min(W+, W-)``. The two-sided p-value doubles the smaller tail of the exact null
    distribution of ``W+`` when at most 20 nonzero differences remain, otherwise it
    comes from the normal approximation with tie and continuity corrections.

    Parameters
    ----------
    paired
        (x, y) pairs
    mode
        *None* chooses by sample size; ``exact`` or ``normal-approximation`` forces
        a method
    """
    _checkMode(mode)
    pairs = np.asarray(list(paired), dtype=float).reshape(-1, 2)
    if not len(pairs):
        raise EmptySampleError("Wilcoxon signed-rank test needs at least one pair")
    diffs = pairs[:, 0] - pairs[:, 1]
    diffs = diffs[diffs != 0]
    if not len(diffs):
        raise DegenerateDataError(
            "All paired differences are zero, the signed-rank test is undefined"
        )
    ranks = rankdata(np.abs(diffs))
    wPlus = float(ranks[diffs > 0].sum())
    wMinus = float(ranks[diffs < 0].sum())
    numDiffs = len(diffs)
    if mode is None:
        mode = (
            COOC_ENUMS.MODE_EXACT
            if numDiffs <= WILCOXON_EXACT_MAX_PAIRS
            else COOC_ENUMS.MODE_NORMAL
        )

    if mode == COOC_ENUMS.MODE_EXACT:
        counts = signedRankDistribution(np.rint(2 * ranks).astype(int).tolist())
        observed = int(round(2 * wPlus))
        pValue = _twoSidedFromCounts(
            counts[: observed + 1].sum(), counts[observed:].sum(), 2.0**numDiffs
        )
    else:
        mean = numDiffs * (numDiffs + 1) / 4
        variance = (
            numDiffs * (numDiffs + 1) * (2 * numDiffs + 1) / 24
            - _tieSum(np.abs(diffs)) / 48
        )
        pValue = _normalPValue(wPlus, mean, variance)
    return TestResult(min(wPlus, wMinus), pValue, COOC_ENUMS.TEST_WILCOXON, mode)


def mannWhitneyU(
    a: t.Sequence[float], b: t.Sequence[float], mode: str = None
) -> TestResult:
    """
    Mann-Whitney U test of two independent samples.

    Ranks use midranks over the pooled sample, and the statistic is
    ``min(U_a, U_b)``. When there are at most 100,000 ways to split the pooled ranks
    into groups of the two sizes, every split is enumerated and the two-sided
    p-value doubles the smaller tail of the exact ``U_a`` distribution. Larger
    samples use the normal approximation with tie and continuity corrections.

    Parameters
    ----------
    a, b
        Samples to compare. Both must be nonempty
    mode
        *None* chooses by sample size; ``exact`` or ``normal-approximation`` forces
        a method
    """
    _checkMode(mode)
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if not len(a) or not len(b):
        raise EmptySampleError(
            f"Mann-Whitney U needs two nonempty samples, got sizes {len(a)} and "
            f"{len(b)}"
        )
    numA, numB = len(a), len(b)
    pooled = np.concatenate([a, b])
    ranks = rankdata(pooled)
    rankSumA = float(ranks[:numA].sum())
    uA = rankSumA - numA * (numA + 1) / 2
    uB = numA * numB - uA
    if mode is None:
        splits = comb(numA + numB, numA)
        mode = (
            COOC_ENUMS.MODE_EXACT
            if splits <= MANN_WHITNEY_EXACT_MAX_SPLITS
            else COOC_ENUMS.MODE_NORMAL
        )

    if mode == COOC_ENUMS.MODE_EXACT:
        doubled = np.rint(2 * ranks).astype(int).tolist()
        doubledTotal = sum(doubled)
        # Enumerating the smaller group is enough: the other one holds the rest
        smaller = min(numA, numB)
        sums = np.fromiter(
            (sum(group) for group in combinations(doubled, smaller)),
            dtype=np.int64,
            count=comb(numA + numB, smaller),
        )
        if smaller != numA:
            sums = doubledTotal - sums
        observed = int(round(2 * rankSumA))
        pValue = _twoSidedFromCounts(
            np.count_nonzero(sums <= observed),
            np.count_nonzero(sums >= observed),
            len(sums),
        )
    else:
        numAll = numA + numB
        mean = numA * numB / 2
        variance = (
            numA
            * numB
            / 12
            * ((numAll + 1) - _tieSum(pooled) / (numAll * (numAll - 1)))
        )
        pValue = _normalPValue(uA, mean, variance)
    return TestResult(min(uA, uB), pValue, COOC_ENUMS.TEST_MANN_WHITNEY, mode)
