"""Brute-force ground truth for every counted quantity.

Everything here works on raw height profiles and shares nothing with the fast
modules except ``Path`` itself, so agreement between the two is evidence
rather than a tautology. Nothing here is meant to be quick.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .errors import LimitExceeded
from .path import Path

DEFAULT_LIMIT = 16

Profile = tuple[int, ...]


def _check(n: int, limit: int) -> None:
    if n > limit:
        raise LimitExceeded(f"length {n} is above the oracle limit {limit}")


def _below(x: Profile, y: Profile) -> bool:
    return all(a <= b for a, b in zip(x, y))


def _valleys(h: Profile) -> list[int]:
    """0-based positions of valley points in h = (h_1, ..., h_n)."""
    full = (0,) + h
    n = len(h)
    return [i - 1 for i in range(1, n + 1)
            if full[i - 1] > full[i] and (i == n or full[i + 1] > full[i])]


def _raise(h: Profile, pos) -> Profile:
    out = list(h)
    for i in pos:
        out[i] += 2
    return tuple(out)


def _covers(h: Profile) -> list[Profile]:
    n = len(h)
    size = sum(h)
    # a cover sits above h with total height exactly 2 more
    return [g for g in _all_profiles(n) if sum(g) == size + 2 and _below(h, g)]


def _join(profiles) -> Profile:
    return tuple(max(col) for col in zip(*profiles))


def _small_steps(h: Profile) -> list[Profile]:
    """Every g != h such that g is the join of some non-empty set of covers of h."""
    cov = _covers(h)
    out = set()
    for r in range(1, len(cov) + 1):
        for sub in itertools.combinations(cov, r):
            out.add(_join(sub))
    return sorted(out)


def _fill(h: Profile) -> Profile:
    cov = _covers(h)
    return _join(cov) if cov else h


@lru_cache(maxsize=None)
def _all_profiles(n: int) -> tuple[Profile, ...]:
    return tuple(Path(b, n).heights for b in range(1 << n))


@lru_cache(maxsize=None)
def _profile_matrix(n: int) -> np.ndarray:
    return np.array(_all_profiles(n), dtype=np.int64).reshape(1 << n, n)


@dataclass(frozen=True)
class EnumFilter:
    kind: str = "all"
    k: Optional[int] = None

    @classmethod
    def degree_equals(cls, k: int) -> "EnumFilter":
        return cls("degree", k)


EnumFilter.ALL = EnumFilter("all")
EnumFilter.DYCK_PATH = EnumFilter("dyck")
EnumFilter.DYCK_PREFIX = EnumFilter("prefix")
EnumFilter.FILLING = EnumFilter("filling")


@lru_cache(maxsize=None)
def _filling_image(n: int) -> frozenset[Profile]:
    # valley-raising on profiles; _fill via covers would be O(4^n) here
    return frozenset(_raise(h, _valleys(h)) for h in _all_profiles(n))


def brute_degree(P: Path) -> int:
    h = P.heights
    top = tuple(range(1, P.n + 1))
    k = 0
    while h != top:
        h = _raise(h, _valleys(h))
        k += 1
    return k


def _accept(h: Profile, flt: EnumFilter) -> bool:
    if flt.kind == "all":
        return True
    if flt.kind == "dyck":
        return min(h, default=0) >= 0 and (not h or h[-1] == 0)
    if flt.kind == "prefix":
        return min(h, default=0) >= 0
    if flt.kind == "filling":
        return h in _filling_image(len(h))
    if flt.kind == "degree":
        return brute_degree(Path.from_heights(h)) == flt.k
    raise ValueError(f"unknown filter {flt.kind!r}")


def enumerate_paths(n: int, flt: EnumFilter = EnumFilter.ALL,
                    limit: int = DEFAULT_LIMIT) -> Iterator[Path]:
    _check(n, limit)
    for b in range(1 << n):
        P = Path(b, n)
        if _accept(P.heights, flt):
            yield P


def brute_interval_count(P: Path, Q: Path, limit: int = DEFAULT_LIMIT) -> int:
    _check(P.n, limit)
    if P.n == 0:
        return 1
    H = _profile_matrix(P.n)
    lo = np.array(P.heights)
    hi = np.array(Q.heights)
    return int(np.count_nonzero(np.all((H >= lo) & (H <= hi), axis=1)))


def shortest_small_chain(P: Path, limit: int = 10) -> int:
    """Length of the shortest chain P -> u^n whose steps are small intervals (BFS)."""
    _check(P.n, limit)
    top = tuple(range(1, P.n + 1))
    seen = {P.heights: 0}
    queue = deque([P.heights])
    while queue:
        h = queue.popleft()
        if h == top:
            return seen[h]
        for g in _small_steps(h):
            if g not in seen:
                seen[g] = seen[h] + 1
                queue.append(g)
    raise AssertionError("u^n is unreachable")


def brute_f(P: Path, limit: int = 10) -> int:
    """Count small-interval chains P -> u^n of minimal length, by DFS."""
    _check(P.n, limit)
    length = shortest_small_chain(P, limit)
    top = tuple(range(1, P.n + 1))
    memo: dict[tuple[Profile, int], int] = {}

    def count(h: Profile, r: int) -> int:
        if r == 0:
            return int(h == top)
        key = (h, r)
        if key not in memo:
            memo[key] = sum(count(g, r - 1) for g in _small_steps(h))
        return memo[key]

    return count(P.heights, length)


def brute_v_count(a: Path, s: Path, limit: int = 14) -> int:
    """Type-V multichains a -> s, checking the valley condition literally."""
    _check(a.n, limit)
    dyck = [P.heights for P in enumerate_paths(a.n, EnumFilter.DYCK_PATH, limit)]
    ha, hs = a.heights, s.heights

    def valleys_upto(h: Profile, c: int) -> set[tuple[int, int]]:
        return {(i, h[i]) for i in _valleys(h) if h[i] <= c}

    top_valley = max((ha[i] for i in _valleys(ha)), default=0)

    def extend(prev: Profile, j: int) -> int:
        if j > top_valley:
            return int(prev == hs)
        total = 0
        for cur in dyck:
            if (_below(prev, cur) and _below(cur, hs)
                    and valleys_upto(prev, top_valley - j) == valleys_upto(cur, top_valley - j)):
                total += extend(cur, j + 1)
        return total

    return extend(ha, 1)


@lru_cache(maxsize=8)
def _mobius_matrix(n: int) -> tuple[tuple[Profile, ...], np.ndarray]:
    """Full Mobius matrix of P_n from mu(x,x) = 1, mu(x,y) = -sum_{x<=z<y} mu(x,z)."""
    elems = sorted(_all_profiles(n), key=sum)
    N = len(elems)
    Z = np.array([[int(_below(x, y)) for y in elems] for x in elems], dtype=object)
    M = np.zeros((N, N), dtype=object)
    for i in range(N):
        M[i, i] = 1
        for j in range(i + 1, N):
            if Z[i, j]:
                M[i, j] = -np.dot(M[i, :j], Z[:j, j])
    return tuple(elems), M


def brute_mobius_power(P: Path, Q: Path, k: int, limit: int = 8) -> int:
    _check(P.n, limit)
    elems, M = _mobius_matrix(P.n)
    index = {h: i for i, h in enumerate(elems)}
    row = np.zeros(len(elems), dtype=object)
    row[index[P.heights]] = 1
    for _ in range(k):
        row = row.dot(M)
    return int(row[index[Q.heights]])


def brute_zeta_power(P: Path, Q: Path, k: int, limit: int = 10) -> int:
    """Multichains of length k from P to Q, by direct enumeration of the interval."""
    _check(P.n, limit)
    inside = [h for h in _all_profiles(P.n) if _below(P.heights, h) and _below(h, Q.heights)]
    row = {P.heights: 1}
    for _ in range(k):
        nxt: dict[Profile, int] = {}
        for x, c in row.items():
            for y in inside:
                if _below(x, y):
                    nxt[y] = nxt.get(y, 0) + c
        row = nxt
    return row.get(Q.heights, 0)
