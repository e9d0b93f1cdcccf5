"""Exit criteria of the library, runnable from pytest and from ``pathlat selftest``.

Every comparison is exact integer equality.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import chains, counting
from .chains import (
    ClosedEvaluator,
    TypeVChain,
    f_closed,
    f_recursive,
    is_type_v,
    mobius_power,
    type_v_chains,
    v_bijection_forward,
    v_count,
    zeta_corollary_check,
)
from .counting import I, J, interval_count
from .filling import count_fillings, degree, degree_count, is_filling, star_fill
from .lattice import IntervalSpec, chain_dist, interval_elements, join, leq, meet, top
from .oracle import (
    EnumFilter,
    brute_f,
    brute_interval_count,
    brute_mobius_power,
    brute_v_count,
    enumerate_paths,
    shortest_small_chain,
)
from .path import Path, is_pyramid_product, parse_path
from .sequences import check_sequence

_U = Path.from_steps("u")
_D = Path.from_steps("d")


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name} ({self.elapsed:.2f}s) {self.detail}"


def _clear_caches() -> None:
    for fn in (counting.I, counting.J, counting.interval_count, chains._v, chains._v_prime,
               chains.f_recursive):
        fn.cache_clear()


# worked examples: a = u2d2u3dudud3 and s_i = u2d2 a_i
PRIME_EXAMPLE_A = "u2d2u3dudud3"
PRIME_EXAMPLE_S = ["u2d2u3dudud3", "u2d2u4d2ud3", "u2d2u3du2d4", "u2d2u4dud4", "u2d2u5d5"]
PRIME_EXAMPLE_I = [71, 51, 46, 36, 21]
PRIME_EXAMPLE_V = [1, 2, 2, 4, 5]
PREFIX_EXAMPLE_J = {
    "u2du2d3u2d": 218, "u2du2d3u3": 183, "u3dud3u2d": 166,
    "u3dud3u3": 141, "u4d4u2d": 114, "u4d4u3": 99,
}

EXAMPLE12_CHAIN = [
    "u2du2du2d2u2d3ud2u3du2dud2udud3",
    "u2du2du2d2u2d3ud2u3du3d3udud3",
    "u2du4d2udud3ud2u5du2d4ud3",
    "u4du2d2ududud4u6dud4ud3",
]
EXAMPLE12_S = "u5du3d3ud3udu4dudud3ud4"
EXAMPLE12_W = "u3du2dududud2ud2udu3du2d2ud2ud3"
EXAMPLE12_IMAGE = [
    EXAMPLE12_W,
    "u3du3d2udud2ud2udu4du2d4ud3",
    "u4du2d2ududud3udu5dud4ud3",
    EXAMPLE12_S,
]


def criterion_1_worked_examples() -> CriterionResult:
    _clear_caches()
    start = time.perf_counter()
    ev = ClosedEvaluator()
    got = {
        "f(u3d2u3dudud4)": ev.f(parse_path("u3d2u3dudud4")),
        "f(du3du2d3u2d)": ev.f(parse_path("du3du2d3u2d")),
        "I": [I(parse_path(s)) for s in PRIME_EXAMPLE_S],
        "V": [v_count(parse_path(PRIME_EXAMPLE_A), parse_path(s)) for s in PRIME_EXAMPLE_S],
        "J": {k: J(parse_path(k)) for k in PREFIX_EXAMPLE_J},
    }
    elapsed = time.perf_counter() - start
    want = {
        "f(u3d2u3dudud4)": 514, "f(du3du2d3u2d)": 921,
        "I": PRIME_EXAMPLE_I, "V": PRIME_EXAMPLE_V, "J": PREFIX_EXAMPLE_J,
    }
    failures = [(k, got[k], want[k]) for k in want if got[k] != want[k]]
    if elapsed >= 1.0:
        failures.append(("runtime", elapsed, "< 1 s"))
    return CriterionResult(1, "worked-example fidelity", not failures,
                           f"runtime {elapsed * 1000:.0f} ms", elapsed, failures)


def criterion_2_interval_oracle(exhaustive_n: int = 7, random_pairs: int = 10_000,
                                random_n: int = 12, seed: int = 20181) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(exhaustive_n + 1):
        paths = list(enumerate_paths(n))
        for P in paths:
            for Q in paths:
                if leq(P, Q):
                    checked += 1
                    if interval_count(P, Q) != brute_interval_count(P, Q):
                        failures.append((P.steps, Q.steps))
    rng = random.Random(seed)
    for _ in range(random_pairs):
        n = rng.randint(1, random_n)
        X = Path(rng.getrandbits(n), n)
        Y = Path(rng.getrandbits(n), n)
        P, Q = meet(X, Y), join(X, Y)
        checked += 1
        if interval_count(P, Q) != brute_interval_count(P, Q):
            failures.append((P.steps, Q.steps))
    return CriterionResult(2, "interval count = brute force", not failures,
                           f"{checked} comparable pairs", time.perf_counter() - start, failures)


def criterion_3_f_oracle(brute_n: int = 8, agree_n: int = 12) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(agree_n + 1):
        for P in enumerate_paths(n):
            r, c = f_recursive(P), f_closed(P)
            checked += 1
            if r != c:
                failures.append((P.steps, r, c))
            elif n <= brute_n and brute_f(P) != r:
                failures.append((P.steps, r, "brute", brute_f(P)))
    return CriterionResult(3, "f: recursive = closed = brute force", not failures,
                           f"{checked} paths", time.perf_counter() - start, failures)


def criterion_4_mobius_power(max_n: int = 7) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(max_n + 1):
        T = top(n)
        for P in enumerate_paths(n):
            d = degree(P)
            for k in range(d + 1):
                want = 0 if k < d else (-1) ** chain_dist(P, T) * f_closed(P)
                got = mobius_power(P, T, k)
                checked += 1
                if got != want or brute_mobius_power(P, T, k) != want:
                    failures.append((P.steps, k, got, want))
    return CriterionResult(4, "Mobius powers at (P, u^n)", not failures,
                           f"{checked} (P, k) cases", time.perf_counter() - start, failures)


def criterion_5_filling_census(census_n: int = 14, oeis_n: int = 20) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    for n in range(census_n + 1):
        got = sum(1 for b in range(1 << n) if is_filling(Path(b, n)))
        if got != count_fillings(n):
            failures.append((n, got, count_fillings(n)))
    seq = check_sequence("A000213", oeis_n)
    if not seq.passed or seq.compared != oeis_n + 1:
        failures.append(("A000213", seq.compared, seq.mismatches))
    return CriterionResult(5, "filling census and tribonacci", not failures,
                           f"census n<={census_n}, A000213 n<={oeis_n}",
                           time.perf_counter() - start, failures)


def criterion_6_degree_distribution(max_n: int = 10) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    for n in range(1, max_n + 1):
        tally: dict[int, int] = {}
        for b in range(1 << n):
            d = degree(Path(b, n))
            tally[d] = tally.get(d, 0) + 1
        for k in range(1, 2 * n):
            if tally.get(k, 0) != degree_count(n, k):
                failures.append((n, k, tally.get(k, 0), degree_count(n, k)))
        if degree(Path.down(n)) != 2 * n - 1:
            failures.append(("d^n", n, degree(Path.down(n))))
    return CriterionResult(6, "degree distribution", not failures, f"n<={max_n}",
                           time.perf_counter() - start, failures)


def criterion_7_zeta_corollaries(max_len: int = 8, max_k: int = 3) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(0, max_len + 1, 2):
        for a in enumerate_paths(n, EnumFilter.DYCK_PATH):
            if not is_pyramid_product(a):
                continue
            for k in range(0, max_k + 1):
                checked += 1
                if not zeta_corollary_check(a, k, "pyramid"):
                    failures.append((a.steps, k, "pyramid"))
                if k >= 1:
                    checked += 1
                    if not zeta_corollary_check(a, k, "top"):
                        failures.append((a.steps, k, "top"))
    return CriterionResult(7, "zeta corollaries", not failures, f"{checked} checks",
                           time.perf_counter() - start, failures)


def criterion_8_v_machinery(max_len: int = 8) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(0, max_len + 1, 2):
        dyck = list(enumerate_paths(n, EnumFilter.DYCK_PATH))
        for a in dyck:
            for s in dyck:
                checked += 1
                if v_count(a, s) != brute_v_count(a, s):
                    failures.append(("V", a.steps, s.steps))
                if not leq(a, s):
                    continue
                below = sum(v_count(a, t) for t in dyck if leq(t, s))
                lifted = v_count(_U + a + _D, _U + s + _D)
                stars = sum(v_count(w, s) for w in interval_elements(IntervalSpec(a, star_fill(a))))
                if not lifted == below == stars:
                    failures.append(("identity", a.steps, s.steps, lifted, below, stars))
                images = set()
                for t in dyck:
                    if leq(t, s):
                        for chain in type_v_chains(a, t):
                            w, image = v_bijection_forward(chain, s)
                            if not (leq(a, w) and leq(w, star_fill(a)) and image.end == s):
                                failures.append(("image", a.steps, s.steps, chain.elements))
                            images.add(image.elements)
                if len(images) != below:
                    failures.append(("bijection", a.steps, s.steps, len(images), below))
    chain = TypeVChain(tuple(parse_path(x) for x in EXAMPLE12_CHAIN))
    w, image = v_bijection_forward(chain, parse_path(EXAMPLE12_S))
    if w != parse_path(EXAMPLE12_W) or list(image.elements) != [parse_path(x) for x in EXAMPLE12_IMAGE]:
        failures.append(("example", w.steps, [e.steps for e in image.elements]))
    if is_type_v([parse_path(x) for x in EXAMPLE12_CHAIN[:3]] + [parse_path(EXAMPLE12_S)]):
        failures.append(("example", "sigma_0..sigma_2, s should not be type V"))
    return CriterionResult(8, "V machinery", not failures, f"{checked} Dyck pairs",
                           time.perf_counter() - start, failures)


def criterion_9_minimality(max_n: int = 6) -> CriterionResult:
    start = time.perf_counter()
    failures = []
    for n in range(max_n + 1):
        for P in enumerate_paths(n):
            if shortest_small_chain(P) != degree(P):
                failures.append((P.steps, shortest_small_chain(P), degree(P)))
    return CriterionResult(9, "no small-interval chain shorter than the degree", not failures,
                           f"n<={max_n}", time.perf_counter() - start, failures)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1_worked_examples,
    2: criterion_2_interval_oracle,
    3: criterion_3_f_oracle,
    4: criterion_4_mobius_power,
    5: criterion_5_filling_census,
    6: criterion_6_degree_distribution,
    7: criterion_7_zeta_corollaries,
    8: criterion_8_v_machinery,
    9: criterion_9_minimality,
}


def run_all(only=None, echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for number, func in CRITERIA.items():
        if only and number not in only:
            continue
        res = func()
        if echo:
            echo(res.line())
        results.append(res)
    return results
