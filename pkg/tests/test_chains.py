import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_paths, p, paths
from pathlat.chains import (
    ClosedEvaluator,
    TypeVChain,
    count_small_multichains,
    f_closed,
    f_eval,
    f_recursive,
    is_type_v,
    mobius,
    mobius_power,
    type_v_chains,
    v_bijection_forward,
    v_count,
    zeta_corollary_check,
    zeta_corollary_sides,
    zeta_power,
)
from pathlat.counting import I, J
from pathlat.errors import DomainError
from pathlat.filling import degree, star_fill
from pathlat.lattice import IntervalSpec, chain_dist, interval_elements, join, leq, meet, top
from pathlat.oracle import (
    EnumFilter,
    brute_f,
    brute_mobius_power,
    brute_v_count,
    brute_zeta_power,
    enumerate_paths,
)
from pathlat.path import Path, is_dyck_prefix, path_stats, pyramid

A = "u2d2u3dudud3"
S = ["u2d2u3dudud3", "u2d2u4d2ud3", "u2d2u3du2d4", "u2d2u4dud4", "u2d2u5d5"]


@pytest.mark.parametrize("text, value", [("u3d2u3dudud4", 514), ("du3du2d3u2d", 921)])
def test_f_examples(text, value):
    assert f_closed(p(text)) == value
    assert f_eval(p(text), "auto") == value


def test_f_small():
    assert f_closed(p("")) == 1
    assert f_closed(Path.up(5)) == 1
    assert f_closed(p("dd")) == 1
    assert f_recursive(p("dudd")) == f_closed(p("dudd")) == brute_f(p("dudd"))
    with pytest.raises(ValueError):
        f_eval(p("ud"), "bogus")


def test_v_examples():
    a = p(A)
    assert [v_count(a, p(s)) for s in S] == [1, 2, 2, 4, 5]
    assert v_count(p("ud"), p("ud")) == 1
    assert brute_v_count(a, p(S[3])) == 4


def test_v_rejects_non_dyck():
    with pytest.raises(DomainError):
        v_count(p("uu"), p("uu"))


def test_v_matches_oracle():
    for n in range(0, 9, 2):
        dyck = list(enumerate_paths(n, EnumFilter.DYCK_PATH))
        for a in dyck:
            for s in dyck:
                assert v_count(a, s) == brute_v_count(a, s)


def test_type_v_enumeration_size():
    for n in range(0, 9, 2):
        dyck = list(enumerate_paths(n, EnumFilter.DYCK_PATH))
        for a in dyck:
            for s in dyck:
                chains = list(type_v_chains(a, s))
                assert len(chains) == v_count(a, s)
                assert all(c.start == a and c.end == s for c in chains)


def test_type_v_chain_validation():
    a = p("udud")
    assert is_type_v([a])
    assert not is_type_v([a, a])
    assert is_type_v([p("uududd"), p("uuuddd")])
    assert not is_type_v([p("uududd"), p("uuddud")])
    with pytest.raises(DomainError):
        TypeVChain((p("uudd"),) * 2)


def test_bijection_lands_in_the_star_interval():
    for n in range(2, 9, 2):
        dyck = list(enumerate_paths(n, EnumFilter.DYCK_PATH))
        for a in dyck:
            for s in dyck:
                if not leq(a, s):
                    continue
                images = set()
                for t in dyck:
                    if leq(t, s):
                        for chain in type_v_chains(a, t):
                            w, image = v_bijection_forward(chain, s)
                            assert leq(a, w) and leq(w, star_fill(a))
                            assert image.end == s and image.start == w
                            images.add(image.elements)
                lifted = v_count(p("u") + a + p("d"), p("u") + s + p("d"))
                assert len(images) == lifted


def test_prime_dyck_sum():
    # f(u a d) for a Dyck a is a V-weighted sum of I over s >= a
    a = p(A)
    total = 0
    for n_s in enumerate_paths(a.n, EnumFilter.DYCK_PATH):
        if leq(a, n_s):
            total += v_count(a, n_s) * I(n_s)
    assert f_closed(p("u") + a + p("d")) == total


def test_small_multichains():
    assert count_small_multichains(p("ud"), p("ud"), 0) == 1
    assert count_small_multichains(p("du"), p("ud"), 1) == 1
    assert count_small_multichains(p("dd"), p("uu"), 3) == 1
    assert count_small_multichains(p("dd"), p("uu"), 2) == 0
    with pytest.raises(DomainError):
        count_small_multichains(p("ud"), p("du"), 1)


def test_f_counts_minimal_small_chains():
    for n in range(8):
        for P in all_paths(n):
            # a repeated element would leave a chain shorter than the degree
            assert count_small_multichains(P, top(n), degree(P)) == f_closed(P)


def test_mobius_basics():
    assert mobius(p("du"), p("ud")) == -1
    assert mobius(p("dd"), p("dd")) == 1
    assert mobius(p("dd"), p("uu")) == 0
    assert mobius(p("ud"), p("du")) == 0


def test_mobius_power_matches_oracle():
    for n in range(6):
        ps = all_paths(n)
        for P in ps:
            for Q in ps:
                if leq(P, Q):
                    for k in range(4):
                        assert mobius_power(P, Q, k) == brute_mobius_power(P, Q, k)


def test_mobius_power_top():
    for n in range(7):
        T = top(n)
        for P in all_paths(n):
            d = degree(P)
            for k in range(d):
                assert mobius_power(P, T, k) == 0
            assert mobius_power(P, T, d) == (-1) ** chain_dist(P, T) * f_closed(P)


def test_mobius_inverts_zeta():
    for n in range(7):
        ps = all_paths(n)
        for P in ps:
            for Q in ps:
                if not leq(P, Q):
                    continue
                elems = list(interval_elements(IntervalSpec(P, Q), cap=200))
                total = sum(mobius(P, R) for R in elems)
                assert total == int(P == Q)


def test_zeta_power():
    assert zeta_power(p("ud"), p("ud"), 3) == 1
    assert zeta_power(p("dd"), p("uu"), 1) == 1
    assert zeta_power(p("dd"), p("uu"), 0) == 0
    for n in range(7):
        for P in all_paths(n):
            assert zeta_power(P, top(n), 2) == J(P)
    assert zeta_power(p("ud"), p("du"), 2) == 0


def test_zeta_power_matches_oracle():
    for n in range(6):
        ps = all_paths(n)
        for P in ps:
            for Q in ps:
                if leq(P, Q):
                    for k in range(4):
                        assert zeta_power(P, Q, k) == brute_zeta_power(P, Q, k)


def test_powers_reject_negative_k():
    with pytest.raises(DomainError):
        zeta_power(p("ud"), p("ud"), -1)
    with pytest.raises(DomainError):
        mobius_power(p("ud"), p("ud"), -1)


@pytest.mark.parametrize("text, k", [("ud", 0), ("uudd", 1), ("uuddud", 2), ("udud", 3)])
def test_zeta_corollaries(text, k):
    assert zeta_corollary_check(p(text), k, "pyramid")
    if k:
        assert zeta_corollary_check(p(text), k, "top")


def test_zeta_corollary_domain():
    with pytest.raises(DomainError):
        zeta_corollary_sides(p("uududd"), 1, "pyramid")
    with pytest.raises(DomainError):
        zeta_corollary_sides(p("ud"), 0, "top")


def test_recursive_equals_closed_exhaustive():
    for n in range(11):
        for P in all_paths(n):
            assert f_recursive(P) == f_closed(P)


def test_brute_f_agrees():
    for n in range(7):
        for P in all_paths(n):
            assert brute_f(P) == f_closed(P)


@settings(max_examples=60, deadline=None)
@given(paths(max_n=16))
def test_leading_up_is_free(P):
    assert f_closed(p("u") + P) == f_closed(P)


DYCK = [a for n in range(0, 11, 2) for a in enumerate_paths(n, EnumFilter.DYCK_PATH)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(DYCK), st.sampled_from(DYCK))
def test_dyck_multiplicative(a, b):
    assert f_closed(a + b) == f_closed(a) * f_closed(b)


def test_d_prefix_with_return():
    for n in range(1, 12):
        for P in all_paths(n):
            if is_dyck_prefix(P) and 0 in P.heights:
                assert f_closed(p("d") + P) == f_closed(P)


def test_trace_records_rules():
    trace = []
    f_closed(p("du3du2d3u2d"), trace)
    rules = {ev["rule"] for ev in trace}
    assert "suffix-prefix-split" in rules or "return-point" in rules
    assert all("path" in ev for ev in trace)
    trace = []
    f_closed(p("u3d3"), trace)
    assert trace
