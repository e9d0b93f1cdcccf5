"""The distributive lattice P_n: order, join/meet, covers, rank and intervals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import CapExceeded, DomainError
from .path import Path, valley_points


def _same_length(P: Path, Q: Path) -> None:
    if P.n != Q.n:
        raise DomainError(f"paths of different lengths: {P.n} and {Q.n}")


def leq(P: Path, Q: Path) -> bool:
    _same_length(P, Q)
    return all(p <= q for p, q in zip(P.heights, Q.heights))


def _from_profile(heights) -> Path:
    # Path.from_heights rejects anything that is not a +-1 walk
    return Path.from_heights(heights)


def join(P: Path, Q: Path) -> Path:
    _same_length(P, Q)
    return _from_profile([max(p, q) for p, q in zip(P.heights, Q.heights)])


def meet(P: Path, Q: Path) -> Path:
    _same_length(P, Q)
    return _from_profile([min(p, q) for p, q in zip(P.heights, Q.heights)])


def dual(P: Path) -> Path:
    return P.dual()


def valley_mask(P: Path, i: int) -> int:
    """XOR mask that turns the valley at point ``i`` into a peak."""
    return 1 if i == P.n else 0b11 << (P.n - i - 1)


def turn_valleys(P: Path, points: Iterable[int]) -> Path:
    bits = P.bits
    for i in points:
        bits ^= valley_mask(P, i)
    return Path(bits, P.n)


def covers(P: Path) -> list[Path]:
    return [turn_valleys(P, (i,)) for i in valley_points(P)]


def chain_dist(P: Path, Q: Path) -> int:
    """Length l(P, Q) of every maximal chain of [P, Q]."""
    if not leq(P, Q):
        raise DomainError(f"{P} is not below {Q}")
    return (sum(Q.heights) - sum(P.heights)) // 2


def rank(P: Path) -> int:
    return sum(P.n - i + 1 for i in range(1, P.n + 1) if P.is_up(i))


def top(n: int) -> Path:
    return Path.up(n)


def bottom(n: int) -> Path:
    return Path.down(n)


@dataclass(frozen=True)
class IntervalSpec:
    lo: Path
    hi: Path

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise DomainError(f"empty interval: {self.lo} is not below {self.hi}")

    @property
    def n(self) -> int:
        return self.lo.n


def _bounds(iv: IntervalSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (0,) + iv.lo.heights, (0,) + iv.hi.heights


@lru_cache(maxsize=1 << 14)
def _size(lo: Path, hi: Path) -> int:
    lb, ub = _bounds(IntervalSpec(lo, hi))
    ways = {0: 1}
    for i in range(1, lo.n + 1):
        nxt: dict[int, int] = {}
        for h, c in ways.items():
            for g in (h - 1, h + 1):
                if lb[i] <= g <= ub[i]:
                    nxt[g] = nxt.get(g, 0) + c
        ways = nxt
    return sum(ways.values())


def interval_size(iv: IntervalSpec) -> int:
    """|[lo, hi]| by a height-band transfer count (no enumeration)."""
    return _size(iv.lo, iv.hi)


def interval_elements(iv: IntervalSpec, cap: Optional[int] = None) -> Iterator[Path]:
    """Yield every R with lo <= R <= hi, lexicographically by height profile.

    Raises CapExceeded before yielding anything if the interval has more than
    ``cap`` elements.
    """
    if cap is not None and interval_size(iv) > cap:
        raise CapExceeded(f"interval [{iv.lo}, {iv.hi}] has more than {cap} elements")
    lb, ub = _bounds(iv)
    n = iv.n

    # every height inside the band extends to a full path, so no backtracking dead ends
    def walk(i: int, h: int, bits: int) -> Iterator[Path]:
        if i == n:
            yield Path(bits, n)
            return
        if lb[i + 1] <= h - 1 <= ub[i + 1]:
            yield from walk(i + 1, h - 1, bits << 1)
        if lb[i + 1] <= h + 1 <= ub[i + 1]:
            yield from walk(i + 1, h + 1, bits << 1 | 1)

    return walk(0, 0, 0)


def up_set(P: Path, cap: Optional[int] = None) -> Iterator[Path]:
    return interval_elements(IntervalSpec(P, top(P.n)), cap)
