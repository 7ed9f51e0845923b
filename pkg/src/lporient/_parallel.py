"""Order-preserving process pool map; results never depend on worker count."""

import os
from concurrent.futures import ProcessPoolExecutor

THREADS_ENV = "LPORIENT_THREADS"


def default_threads():
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(func, items, threads=None):
    items = list(items)
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items, chunksize=chunk))
