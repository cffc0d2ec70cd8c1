import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from latmin.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def worker_count(requested: int | None = None) -> int:
    cap = max(1, settings.THREADS)
    if requested is None:
        return cap
    return max(1, min(requested, cap))


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> List[R]:
    """Map ``fn`` over ``items`` and return results in input order."""
    items = list(items)
    count = worker_count(workers)
    if count == 1 or len(items) < 2:
        return [fn(item) for item in items]
    logger.debug("fanning out %d tasks over %d workers", len(items), count)
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items))
