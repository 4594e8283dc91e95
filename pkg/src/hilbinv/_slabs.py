"""Deterministic partitioning of integer ranges across worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split the inclusive range ``[lo, hi]`` into at most ``parts`` contiguous slabs."""
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, parts)
    slabs = []
    start = lo
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0) - 1
        slabs.append((start, stop))
        start = stop + 1
    return slabs


def map_slabs(fn: Callable[..., T], jobs: Iterable[tuple], workers: int = 1) -> list[T]:
    """Apply ``fn(*job)`` to every job, preserving job order in the result."""
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))
