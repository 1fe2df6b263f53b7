from __future__ import annotations

import gc
import time
import tracemalloc
import typing as t

from ..logger import getAppLogger
from ..structures import AllocationHookError

__all__ = [
    "installAllocationHook",
    "removeAllocationHook",
    "measureRun",
]

_logger = getAppLogger(__name__)

_overheadBytes: t.Optional[int] = None
_warmupRuns = 3
_calibrationRuns = 10

T = t.TypeVar("T")


def _rawMeasure(task: t.Callable[[], T]) -> t.Tuple[float, int, T]:
    gcWasEnabled = gc.isenabled()
    gc.disable()
    try:
        # Besides the task, allocations between the baseline and peak reads are fixed
        start = time.perf_counter()
        baseline = tracemalloc.get_traced_memory()[0]
        tracemalloc.reset_peak()
        result = task()
        peak = tracemalloc.get_traced_memory()[1]
        elapsed = time.perf_counter() - start
    finally:
        if gcWasEnabled:
            gc.enable()
    return elapsed, peak - baseline, result


def installAllocationHook():
    """
    Starts process-wide allocation tracing and calibrates what a measurement of an
    empty task reports, so ``measureRun`` can subtract it. Calling it again only
    recalibrates.
    """
    global _overheadBytes
    if not tracemalloc.is_tracing():
        tracemalloc.start()
    # Cycles left by earlier work, such as a caught exception, are collected first
    gc.collect()
    emptyTask = lambda: None
    for _ in range(_warmupRuns):
        _rawMeasure(emptyTask)
    _overheadBytes = max(_rawMeasure(emptyTask)[1] for _ in range(_calibrationRuns))
    _logger.debug("Allocation hook installed, overhead %d bytes", _overheadBytes)


def removeAllocationHook():
    global _overheadBytes
    if tracemalloc.is_tracing():
        tracemalloc.stop()
    _overheadBytes = None


def measureRun(task: t.Callable[[], T]) -> t.Tuple[float, int, T]:
    """
    Runs ``task`` once and reports how long it took and how far net allocations rose
    above their starting level while it ran.

    The cyclic garbage collector is paused during the task, so a collection does not
    land in one sample and not another.

    Returns
    -------
    tuple
        (wall seconds from ``time.perf_counter``, peak bytes, task result)
    """
    if _overheadBytes is None or not tracemalloc.is_tracing():
        raise AllocationHookError(
            "No allocation hook is installed, call installAllocationHook() before "
            "measuring"
        )
    elapsed, peak, result = _rawMeasure(task)
    return elapsed, max(0, peak - _overheadBytes), result
