"""
Map parallèle déterministe (ordre des résultats = ordre des entrées)
"""
from multiprocessing import Pool, cpu_count
from typing import Callable, Iterable, List, Optional, TypeVar

from config.settings import THREADS

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Applique func à chaque élément, en séquentiel si threads ≤ 1

    func doit être une fonction de module (picklable).
    """
    items = list(items)
    workers = min(threads if threads is not None else THREADS, cpu_count(), max(1, len(items)))
    if workers <= 1:
        return [func(item) for item in items]
    with Pool(workers) as pool:
        return pool.map(func, items)
