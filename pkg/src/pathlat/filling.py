"""Filling of a path, its low/star variants, degree, and filling statistics."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .counting import binom
from .errors import DomainError
from .lattice import turn_valleys
from .path import Path, path_stats, valley_points


def filling(P: Path) -> Path:
    """Turn every valley of P into a peak (the join of all covers of P)."""
    return turn_valleys(P, valley_points(P))


def low_fill(P: Path) -> Path:
    stats = path_stats(P)
    return turn_valleys(P, (i for i, y in stats.valleys if y == stats.lv))


def star_fill(P: Path) -> Path:
    """Turn every valley except the final endpoint valley (if P ends with d)."""
    return turn_valleys(P, (i for i in valley_points(P) if i != P.n))


def degree_formula(P: Path) -> int:
    lv = path_stats(P).lv
    if lv is None:
        return 0
    return P.n - 1 - lv


@lru_cache(maxsize=1 << 16)
def degree(P: Path) -> int:
    """Number of filling iterations that take P to u^n."""
    target = Path.up(P.n)
    k = 0
    Q = P
    while Q != target:
        Q = filling(Q)
        k += 1
    if k != degree_formula(P):
        raise AssertionError(f"degree of {P}: iteration gives {k}, formula {degree_formula(P)}")
    return k


@dataclass(frozen=True)
class FillingReport:
    filling: Path
    low_fill: Path
    star_fill: Path
    degree: int
    iterates: list[Path]


def filling_report(P: Path) -> FillingReport:
    iterates = [P]
    target = Path.up(P.n)
    while iterates[-1] != target:
        iterates.append(filling(iterates[-1]))
    return FillingReport(filling(P), low_fill(P), star_fill(P), degree(P), iterates)


def is_filling(P: Path) -> bool:
    s = P.steps
    return (s != "d" and "dduu" not in s and not s.startswith("duu")
            and not s.endswith("dd"))


def count_fillings(n: int) -> int:
    """a_0 = a_1 = 1, a_2 = 3, a_n = a_{n-1} + a_{n-2} + a_{n-3}."""
    if n < 0:
        raise DomainError("n must be non-negative")
    a = [1, 1, 3]
    while len(a) <= n:
        a.append(a[-1] + a[-2] + a[-3])
    return a[n]


def degree_count(n: int, k: int) -> int:
    """Number of paths of length n with degree k."""
    if k == 0 and n >= 0:
        return 1
    if n < 1 or not 1 <= k <= 2 * n - 1:
        raise DomainError(f"degree {k} is out of range for length {n}")
    return binom(min(n, k), (k + 2) // 2)
