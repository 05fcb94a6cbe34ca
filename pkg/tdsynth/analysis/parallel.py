"""Order-preserving batch map."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from ..config import get_config

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """``[fn(x) for x in items]``, run on up to ``threads`` workers.

    Results come back in input order whatever the completion order. The
    default worker count is ``Config.threads`` (TDSYNTH_THREADS).
    """
    items = list(items)
    if threads is None:
        threads = get_config().threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))
