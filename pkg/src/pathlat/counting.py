"""Exact interval cardinalities in P_n."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .lattice import leq, top
from .path import Path, is_dyck, pyramid, to_kseq


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever n < 0, k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def interval_matrix(ks: Sequence[int], mus: Sequence[int]) -> list[list[int]]:
    """Matrix (binom(mu_i - k_j + 1, j - i + 1))_{i,j in [m]} from the first m terms."""
    m = len(ks)
    return [[binom(mus[i] - ks[j] + 1, j - i + 1) for j in range(m)] for i in range(m)]


def interval_count_same_end(P: Path, Q: Path, trim: bool = True) -> int:
    if P.n != Q.n:
        raise DomainError(f"paths of different lengths: {P.n} and {Q.n}")
    if P.downs != Q.downs:
        raise DomainError(f"{P} and {Q} do not end at the same point")
    if not leq(P, Q):
        raise DomainError(f"{P} is not below {Q}")
    ks = list(to_kseq(P).ks[:-1])
    mus = list(to_kseq(Q).ks[:-1])
    if trim:
        while ks and ks[-1] == mus[-1]:
            ks.pop()
            mus.pop()
    return bareiss_det(interval_matrix(ks, mus))


def _flip_last(P: Path, src: str, dst: str, r: int) -> Path:
    """Rewrite the last ``r`` occurrences of step ``src`` as ``dst``."""
    s = list(P.steps)
    for i in range(len(s) - 1, -1, -1):
        if r == 0:
            break
        if s[i] == src:
            s[i] = dst
            r -= 1
    return Path.from_steps("".join(s))


@lru_cache(maxsize=1 << 16)
def interval_count(P: Path, Q: Path, lenient: bool = False) -> int:
    """|[P, Q]|; splits by endpoint when P and Q end at different heights."""
    if P.n != Q.n:
        raise DomainError(f"paths of different lengths: {P.n} and {Q.n}")
    if not leq(P, Q):
        if lenient:
            return 0
        raise DomainError(f"{P} is not below {Q}")
    gap = P.downs - Q.downs
    if gap == 0:
        return interval_count_same_end(P, Q)
    total = 0
    for i in range(gap + 1):
        lo = _flip_last(P, "d", "u", gap - i)
        hi = _flip_last(Q, "u", "d", i)
        if leq(lo, hi):
            total += interval_count_same_end(lo, hi)
    return total


@lru_cache(maxsize=1 << 16)
def I(a: Path) -> int:
    """|[a, u^m d^m]| for a Dyck path a of length 2m."""
    if not is_dyck(a):
        raise DomainError(f"{a} is not a Dyck path")
    return interval_count(a, pyramid(a.n // 2))


@lru_cache(maxsize=1 << 16)
def J(P: Path) -> int:
    """|[P, u^n]|."""
    return interval_count(P, top(P.n))
