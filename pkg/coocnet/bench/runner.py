from __future__ import annotations

import typing as t
from dataclasses import dataclass

from .measure import measureRun
from ..constants import COOC_ENUMS, benchWarmup
from ..index import InvertedIndex
from ..logger import getAppLogger
from ..processing import buildBfs, buildRecursive, buildTraversal
from ..structures import (
    CoocGraph,
    Corpus,
    ExpandParams,
    FilterConditions,
    Term,
    TokenizerConfig,
    UnknownSeedError,
)

__all__ = ["BenchSample", "runBenchmark", "pickSeeds"]

_logger = getAppLogger(__name__)


@dataclass(frozen=True)
class BenchSample:
    algo: str
    seedTerm: Term
    rep: int
    wallTimeS: float
    peakMemBytes: int
    numEdges: int = 0
    """Size of the built graph. Not a timing field, so it must repeat across runs"""

    def __post_init__(self):
        if self.algo not in COOC_ENUMS.ALL_ALGOS:
            raise ValueError(f"Unknown algorithm {self.algo!r}")
        if self.wallTimeS < 0 or self.peakMemBytes < 0:
            raise ValueError(
                f"Measurements must be nonnegative, got {self.wallTimeS}s and "
                f"{self.peakMemBytes} bytes"
            )


def pickSeeds(index: InvertedIndex, n: int, minDf=1) -> t.List[Term]:
    """The ``n`` highest-df terms of the whole index, df descending then term"""
    return [term for term, _ in index.topKTerms(index.docIds, n, minDf=minDf)]


def _makeTasks(index, corpus, cfg, seed: Term, p: ExpandParams, algos):
    cond = FilterConditions({seed})
    builders: t.Dict[str, t.Callable[[], CoocGraph]] = {
        COOC_ENUMS.ALGO_TRAVERSAL: lambda: buildTraversal(index, corpus, cfg, cond),
        COOC_ENUMS.ALGO_RECURSIVE: lambda: buildRecursive(index, cond, p),
        COOC_ENUMS.ALGO_BFS: lambda: buildBfs(index, cond, p),
    }
    return {algo: builders[algo] for algo in algos}


def runBenchmark(
    index: InvertedIndex,
    corpus: Corpus,
    cfg: TokenizerConfig,
    seeds: t.Sequence[Term],
    p: ExpandParams,
    reps: int,
    withRecursive=False,
    warmup: int = None,
) -> t.List[BenchSample]:
    """
    Measures the baseline traversal against BFS expansion (and optionally recursive
    expansion) for every seed term used as the only filtering condition.

    Every (algorithm, seed) first runs ``warmup`` discarded times. Each repetition
    then runs all algorithms, alternating their order from one repetition to the
    next.

    Parameters
    ----------
    index, corpus, cfg
        Index, the corpus it was built from and the tokenizer settings it used. The
        traversal re-tokenizes documents with ``cfg``
    seeds
        Seed terms. All must be in the index lexicon, which is checked before any run
    p
        Expansion parameters for the index-based builders
    reps
        Measured repetitions per (algorithm, seed)
    withRecursive
        Also measure the recursive expansion
    warmup
        Discarded runs per (algorithm, seed). *None* uses the configured default,
        which the ``COOCNET_BENCH_WARMUP`` environment variable overrides
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, was {reps}")
    unknown = [seed for seed in seeds if seed not in index.lexicon]
    if unknown:
        raise UnknownSeedError(unknown)
    if warmup is None:
        warmup = benchWarmup()
    algos = [COOC_ENUMS.ALGO_TRAVERSAL, COOC_ENUMS.ALGO_BFS]
    if withRecursive:
        algos.insert(1, COOC_ENUMS.ALGO_RECURSIVE)

    samples = []
    runNumber = 0
    for seedNumber, seed in enumerate(seeds):
        tasks = _makeTasks(index, corpus, cfg, seed, p, algos)
        for algo in algos:
            for _ in range(warmup):
                measureRun(tasks[algo])
        for rep in range(reps):
            order = algos if runNumber % 2 == 0 else algos[::-1]
            runNumber += 1
            for algo in order:
                wallTime, peak, graph = measureRun(tasks[algo])
                samples.append(
                    BenchSample(algo, seed, rep, wallTime, peak, graph.numEdges)
                )
        _logger.debug(f"Benchmarked seed {seedNumber + 1}/{len(seeds)}: {seed!r}")
    _logger.info(f"Collected {len(samples)} benchmark samples over {len(seeds)} seeds")
    return samples
