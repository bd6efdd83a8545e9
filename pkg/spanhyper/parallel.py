"""Order-preserving process-pool map used by the sampling drivers."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int]) -> int:
    """None means every available core."""
    if jobs is None:
        return os.cpu_count() or 1
    return max(1, int(jobs))


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = 1) -> list[R]:
    """Map fn over items, in a process pool when jobs > 1.

    Results come back in input order, so reductions over them do not depend
    on the worker count. fn and items must be picklable.
    """
    items = list(items)
    workers = min(resolve_jobs(jobs), max(1, len(items)))
    if workers <= 1:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("parallel_map: %d items over %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
