"""Deterministic worker-pool helper.

Results are combined in input order (or by commutative dict merge), so any
worker count produces identical output.
"""
from __future__ import annotations

import multiprocessing
import os
from typing import Callable, Iterable, Sequence


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get("MMIK_JOBS")
        if env:
            try:
                jobs = int(env)
            except ValueError:
                jobs = 1
        else:
            jobs = 1
    return max(1, jobs)


def parallel_map(fn: Callable, items: Sequence, jobs: int, chunksize: int = 1) -> list:
    """Order-preserving map, optionally across a fork pool."""
    jobs = min(resolve_jobs(jobs), len(items)) if items else 1
    if jobs <= 1:
        return [fn(x) for x in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize)


def chunks(items: Sequence, count: int) -> list[Sequence]:
    count = max(1, count)
    step = (len(items) + count - 1) // count
    return [items[i : i + step] for i in range(0, len(items), step)] if items else []
