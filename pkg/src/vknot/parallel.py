"""Deterministic range-partitioned evaluation of state sums.

State enumerations split into index ranges whose partial results merge
by a commutative, associative operation, so the parallelism degree can
never change an answer, only the wall time.
"""

from __future__ import annotations

from typing import Callable, Sequence


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous non-empty ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges


def _call(args):
    fn, payload, start, stop = args
    return fn(payload, start, stop)


def map_state_ranges(fn: Callable, payload, total: int, parallel: int) -> Sequence:
    """Evaluate fn(payload, start, stop) over a partition of [0, total).

    With parallel > 1 the chunks run in a process pool; results come back
    in range order either way.
    """
    ranges = split_ranges(total, max(1, parallel) * 4)
    jobs = [(fn, payload, a, b) for a, b in ranges]
    if parallel <= 1 or len(ranges) == 1:
        return [_call(j) for j in jobs]
    import multiprocessing

    with multiprocessing.Pool(parallel) as pool:
        return pool.map(_call, jobs)
