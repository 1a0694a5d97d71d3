"""Exact counts of minimal rdf on paths and forests of paths via linear recurrences.

c2(n): minimal rdf of P_n whose first vertex is labelled 2
cn2(n): minimal rdf of P_n whose first vertex is not labelled 2
total: c2 + cn2
"""

import math
import threading
from dataclasses import dataclass
from typing import Iterable

_lock = threading.Lock()
_cn2: list[int] = [0, 1, 2, 3]  # index 0 unused


@dataclass(frozen=True)
class PathCountTable:
    n: int
    c2: int
    cn2: int
    total: int


def _check(n: int):
    if n < 1:
        raise ValueError(f"path length must be >= 1, got {n}")


def _extend(n: int):
    with _lock:
        while len(_cn2) <= n:
            m = len(_cn2)
            _cn2.append(_cn2[m - 1] + _c2_unlocked(m - 2) + _total_unlocked(m - 3))


def _c2_unlocked(n: int) -> int:
    if n == 1:
        return 0
    if n == 2:
        return 1
    return _cn2[n - 2]


def _total_unlocked(n: int) -> int:
    return _c2_unlocked(n) + _cn2[n]


def count_prefix_not2(n: int) -> int:
    _check(n)
    if n >= len(_cn2):
        _extend(n)
    return _cn2[n]


def count_prefix2(n: int) -> int:
    _check(n)
    if n <= 2:
        return n - 1
    return count_prefix_not2(n - 2)


def count_path(n: int) -> int:
    return count_prefix2(n) + count_prefix_not2(n)


def count_table(n: int) -> PathCountTable:
    c2, cn2 = count_prefix2(n), count_prefix_not2(n)
    return PathCountTable(n=n, c2=c2, cn2=cn2, total=c2 + cn2)


def count_prefix_not2_reduced(n: int) -> int:
    """cn2(n) = cn2(n-1) + cn2(n-3) + cn2(n-4) + cn2(n-5), seeded from the full recurrence (n >= 6)."""
    if n < 6:
        raise ValueError(f"reduced recurrence needs n >= 6, got {n}")
    window = [count_prefix_not2(i) for i in range(1, 6)]
    for _ in range(6, n + 1):
        window.append(window[-1] + window[-3] + window[-4] + window[-5])
        window.pop(0)
    return window[-1]


def count_path_forest(lengths: Iterable[int]) -> int:
    lengths = list(lengths)
    for n in lengths:
        _check(n)
    return math.prod(count_path(n) for n in lengths)


def growth_estimate(n: int) -> float:
    if n < 2:
        raise ValueError(f"growth estimate needs n >= 2, got {n}")
    return count_path(n) / count_path(n - 1)


def growth_root() -> float:
    """Dominant root of x^5 = x^4 + x^2 + x + 1, i.e. the branching number of (1, 3, 4, 5)."""
    from services.analysis_service import branching_number
    return branching_number((1, 3, 4, 5))


def branching_numbers(n_max: int) -> list[tuple[int, float]]:
    """Per-component growth count_path(n)^(1/n) for n = 2..n_max."""
    return [(n, count_path(n) ** (1.0 / n)) for n in range(2, n_max + 1)]
