"""Minimal chains with small intervals, type-V multichains, Mobius/zeta powers.

``f(P)`` counts the chains ``P = P_0 < P_1 < ... < P_k = u^n`` of length
``k = degree(P)`` in which every ``P_i`` lies below the filling of ``P_{i-1}``.
Two evaluators are provided and must agree: a memoized recursion over
``[low_fill(P), filling(P)]`` and a closed evaluator assembled from the
suffix/prefix factorization, the prime Dyck sum ``f(uad) = sum V(a,s) I(s)``
and the ``f(duP)`` sum over Dyck-prefix towers.
"""
from __future__ import annotations

import enum
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .counting import I, J
from .errors import DomainError
from .filling import filling, low_fill
from .lattice import IntervalSpec, chain_dist, interval_elements, leq, top, turn_valleys
from .path import (
    Path,
    concat,
    is_dyck,
    is_pyramid_product,
    min_split,
    path_stats,
    prefix_form,
    prime_factors,
    pyramid,
    valley_points,
)

log = logging.getLogger(__name__)

_U = Path.from_steps("u")
_D = Path.from_steps("d")
_EMPTY = Path.empty()


class Method(enum.Enum):
    RECURSIVE = "recursive"
    CLOSED = "closed"
    AUTO = "auto"


# --- the recursion ----------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def f_recursive(P: Path) -> int:
    if P == top(P.n):
        return 1
    return sum(f_recursive(Q) for Q in interval_elements(IntervalSpec(low_fill(P), filling(P))))


# --- type-V multichains -----------------------------------------------------


def _valley_set(P: Path, max_height: int) -> frozenset[tuple[int, int]]:
    return frozenset((i, y) for i, y in path_stats(P).valleys if y <= max_height)


def _hv0(P: Path) -> int:
    hv = path_stats(P).hv
    return 0 if hv is None else hv


@dataclass(frozen=True)
class TypeVChain:
    """Multichain s_0 <= ... <= s_h of Dyck paths with h = hv(s_0)."""
    elements: tuple[Path, ...]

    def __post_init__(self):
        if not self.elements:
            raise DomainError("a multichain needs at least one element")
        if not is_type_v(self.elements):
            raise DomainError("not a type-V multichain: " + " <= ".join(map(str, self.elements)))

    @property
    def h(self) -> int:
        return len(self.elements) - 1

    @property
    def start(self) -> Path:
        return self.elements[0]

    @property
    def end(self) -> Path:
        return self.elements[-1]


def is_type_v(elements: Sequence[Path]) -> bool:
    if not elements:
        return False
    n = elements[0].n
    if any(e.n != n or not is_dyck(e) for e in elements):
        return False
    h = _hv0(elements[0])
    if len(elements) != h + 1:
        return False
    for j in range(1, h + 1):
        prev, cur = elements[j - 1], elements[j]
        if not leq(prev, cur):
            return False
        if _valley_set(prev, h - j) != _valley_set(cur, h - j):
            return False
    return True


def _returns(a: Path) -> tuple[int, ...]:
    return tuple(i for i, y in enumerate(a.heights, 1) if y == 0)


def dyck_above_same_returns(a: Path) -> Iterator[Path]:
    """Dyck paths s >= a sharing all returns (low valleys) with a."""
    choices = []
    for factor in prime_factors(a):
        inner = factor[1:-1]
        choices.append(list(interval_elements(IntervalSpec(inner, pyramid(inner.n // 2)))))
    for combo in itertools.product(*choices):
        yield concat(*(_U + s + _D for s in combo))


def _check_dyck_pair(a: Path, s: Path) -> None:
    if a.n != s.n:
        raise DomainError(f"paths of different lengths: {a.n} and {s.n}")
    for x in (a, s):
        if not is_dyck(x):
            raise DomainError(f"{x} is not a Dyck path")


@lru_cache(maxsize=1 << 18)
def _v_prime(a: Path, s: Path) -> int:
    # V(uad, usd) = sum over Dyck t with a <= t <= s of V(a, t)
    if not leq(a, s):
        return 0
    ret = _returns(a)
    return sum(_v(a, t) for t in interval_elements(IntervalSpec(a, s)) if _returns(t) == ret)


@lru_cache(maxsize=1 << 18)
def _v(a: Path, s: Path) -> int:
    if a == s and _hv0(a) == 0:
        return 1
    if _returns(a) != _returns(s) or not leq(a, s):
        return 0
    total = 1
    for fa, fs in zip(prime_factors(a), prime_factors(s)):
        total *= _v_prime(fa[1:-1], fs[1:-1])
        if not total:
            break
    return total


def v_count(a: Path, s: Path) -> int:
    """Number of type-V multichains from a to s."""
    _check_dyck_pair(a, s)
    return _v(a, s)


def v_bijection_forward(chain: TypeVChain, s: Path) -> tuple[Path, TypeVChain]:
    """Map an a-t type-V multichain and some s >= t to (w, w-s type-V multichain).

    ``w`` lies in ``[a, star_fill(a)]``.
    """
    t = chain.end
    _check_dyck_pair(t, s)
    if not leq(t, s):
        raise DomainError(f"{t} is not below {s}")
    sigma = list(chain.elements) + [s]
    h = chain.h
    tau = []
    for i in range(h + 2):
        vs = path_stats(sigma[i]).valleys
        turn = [p for p, y in vs
                if y <= h - i and (p, y) not in _valley_set(sigma[h + 1 - y], y)]
        tau.append(turn_valleys(sigma[i], turn))
    w = tau[0]
    k = _hv0(w)
    return w, TypeVChain(tuple(tau[h + 1 - k:]))


def type_v_chains(a: Path, s: Path) -> Iterator[TypeVChain]:
    """Enumerate all a-s type-V multichains (small instances only)."""
    _check_dyck_pair(a, s)
    h = _hv0(a)

    def extend(prefix: list[Path]) -> Iterator[list[Path]]:
        j = len(prefix)
        if j == h + 1:
            if prefix[-1] == s:
                yield prefix
            return
        prev = prefix[-1]
        if not leq(prev, s):
            return
        keep = _valley_set(prev, h - j)
        for cur in interval_elements(IntervalSpec(prev, s)):
            if _valley_set(cur, h - j) == keep:
                yield from extend(prefix + [cur])

    for elems in extend([a]):
        yield TypeVChain(tuple(elems))


# --- closed evaluator -------------------------------------------------------


class ClosedEvaluator:
    """Closed-form evaluation of f with an optional trace of the identities used.

    Pure Dyck-suffix factors have no closed form; for those one step of the
    basic recursion is taken and its terms are evaluated in closed form again.
    """

    def __init__(self, trace: Optional[list] = None):
        self.trace = trace
        self._f: dict[Path, int] = {}
        self._du: dict[Path, int] = {}
        self._prime: dict[Path, int] = {}

    def _note(self, rule: str, P: Path, **extra) -> None:
        if self.trace is not None:
            self.trace.append({"rule": rule, "path": P.steps, **extra})

    def f(self, P: Path) -> int:
        if P in self._f:
            return self._f[P]
        lead = len(P.steps) - len(P.steps.lstrip("u"))
        if lead == P.n:
            self._note("top", P)
            value = 1
        elif lead:
            self._note("strip-leading-up", P, drop=lead)
            value = self.f(P[lead:])
        else:
            P1, P2 = min_split(P)
            if P2.n:
                self._note("suffix-prefix-split", P, suffix=P1.steps, prefix=P2.steps)
                value = self.f_suffix(P1) * self.f_d_prefix(P2)
            else:
                value = self.f_suffix(P1)
        self._f[P] = value
        return value

    def f_suffix(self, P: Path) -> int:
        """f on a Dyck suffix starting with d."""
        if P == _D:
            return 1
        self._note("dyck-suffix-recursion", P)
        return sum(self.f(Q) for Q in interval_elements(IntervalSpec(low_fill(P), filling(P))))

    def f_d_prefix(self, P: Path) -> int:
        """f(dP) for a non-empty Dyck prefix P."""
        a0 = prefix_form(P)[0]
        if not a0.n:
            return self.f_du(P[1:])
        # P has a return, so f(dP) = f(P) = f(a0) f(du P') with P = a0 u P'
        self._note("return-point", P, dyck=a0.steps)
        rest = P[a0.n:]
        value = self.f_dyck(a0)
        if rest.n:
            value *= self.f_du(rest[1:])
        return value

    def f_dyck(self, a: Path) -> int:
        factors = prime_factors(a)
        if len(factors) > 1:
            self._note("dyck-multiplicative", a, factors=[x.steps for x in factors])
        value = 1
        for x in factors:
            value *= self.f_prime(x[1:-1])
        return value

    def f_prime(self, a: Path) -> int:
        """f(uad) = sum over s >= a of V(a, s) I(s)."""
        if a in self._prime:
            return self._prime[a]
        self._note("prime-dyck-sum", _U + a + _D)
        value = sum(_v(a, s) * I(s) for s in dyck_above_same_returns(a)) if a.n else 1
        self._prime[a] = value
        return value

    def f_du(self, P: Path) -> int:
        """f(duP) for a Dyck prefix P = a_0 u a_1 ... u a_k."""
        if P in self._du:
            return self._du[P]
        self._note("du-prefix-sum", _D + _U + P)
        parts = prefix_form(P)
        # weights of V_i, built from V_{k+1} = empty down to V_1
        towers: dict[Path, int] = {_EMPTY: 1}
        for ai in reversed(parts[1:]):
            nxt: dict[Path, int] = defaultdict(int)
            for si in dyck_above_same_returns(ai):
                v = _v(ai, si)
                if not v:
                    continue
                for below, weight in towers.items():
                    lower = _U + si + below
                    for Vi in interval_elements(IntervalSpec(lower, top(lower.n))):
                        nxt[Vi] += v * weight
            towers = nxt
        value = 0
        for s0 in dyck_above_same_returns(parts[0]):
            v = _v(parts[0], s0)
            if v:
                value += v * sum(weight * J(s0 + V1) for V1, weight in towers.items())
        self._du[P] = value
        return value


_shared_closed = ClosedEvaluator()


def f_closed(P: Path, trace: Optional[list] = None) -> int:
    if trace is None:
        return _shared_closed.f(P)
    return ClosedEvaluator(trace).f(P)


def f_eval(P: Path, method: Method | str = Method.AUTO, trace: Optional[list] = None) -> int:
    """Number of minimal small-interval chains from P to u^n."""
    method = Method(method)
    if method is Method.RECURSIVE:
        return f_recursive(P)
    return f_closed(P, trace)


# --- multichains, Mobius and zeta powers ------------------------------------


def small_successors(P: Path, bound: Optional[Path] = None) -> Iterator[Path]:
    """Every Q in [P, filling(P)] (optionally Q <= bound), i.e. P <= Q with a small interval."""
    vs = valley_points(P)
    for r in range(len(vs) + 1):
        for subset in itertools.combinations(vs, r):
            Q = turn_valleys(P, subset)
            if bound is None or leq(Q, bound):
                yield Q


def count_small_multichains(P: Path, Q: Path, k: int) -> int:
    if not leq(P, Q):
        raise DomainError(f"{P} is not below {Q}")
    if k < 0:
        raise DomainError("multichain length must be non-negative")
    layer = {P: 1}
    for _ in range(k):
        nxt: dict[Path, int] = defaultdict(int)
        for x, c in layer.items():
            for y in small_successors(x, Q):
                nxt[y] += c
        layer = nxt
    return layer.get(Q, 0)


def mobius(P: Path, Q: Path) -> int:
    if leq(P, Q) and leq(Q, filling(P)):
        return -1 if chain_dist(P, Q) % 2 else 1
    return 0


def mobius_power(P: Path, Q: Path, k: int, cap: Optional[int] = None) -> int:
    """k-th convolution power of the Mobius function, evaluated at (P, Q)."""
    if k < 0:
        raise DomainError("power must be non-negative")
    if not leq(P, Q):
        return 0
    elements = set(interval_elements(IntervalSpec(P, Q), cap))
    row = {P: 1}
    for _ in range(k):
        nxt: dict[Path, int] = defaultdict(int)
        for x, c in row.items():
            for y in small_successors(x, Q):
                if y in elements:
                    nxt[y] += c * mobius(x, y)
        row = {y: c for y, c in nxt.items() if c}
    return row.get(Q, 0)


def zeta_power(P: Path, Q: Path, k: int, cap: Optional[int] = None) -> int:
    """Number of multichains P = P_0 <= ... <= P_k = Q."""
    if k < 0:
        raise DomainError("power must be non-negative")
    if not leq(P, Q):
        return 0
    elements = list(interval_elements(IntervalSpec(P, Q), cap))
    row = {P: 1}
    for _ in range(k):
        nxt: dict[Path, int] = defaultdict(int)
        for x, c in row.items():
            for y in elements:
                if leq(x, y):
                    nxt[y] += c
        row = nxt
    return row.get(Q, 0)


class Variant(enum.Enum):
    PYRAMID = "pyramid"
    TOP = "top"


def zeta_corollary_sides(a: Path, k: int, variant: Variant | str) -> tuple[int, int]:
    """(f side, zeta side) of the pyramid-product identities."""
    variant = Variant(variant)
    if not is_pyramid_product(a):
        raise DomainError(f"{a} is not a product of pyramids")
    if variant is Variant.PYRAMID:
        if k < 0:
            raise DomainError("k must be >= 0")
        lhs = f_closed(Path.up(k) + a + Path.down(k))
        rhs = zeta_power(a, pyramid(a.n // 2), k + 1)
    else:
        if k < 1:
            raise DomainError("k must be >= 1")
        lhs = f_closed(_D + Path.up(k) + a)
        rhs = zeta_power(a, top(a.n), k + 1)
    return lhs, rhs


def zeta_corollary_check(a: Path, k: int, variant: Variant | str) -> bool:
    lhs, rhs = zeta_corollary_sides(a, k, variant)
    if lhs != rhs:
        log.warning("zeta corollary (%s) fails for a=%s k=%d: %d != %d", variant, a, k, lhs, rhs)
    return lhs == rhs
