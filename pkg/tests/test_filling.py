import pytest
from hypothesis import given

from conftest import all_paths, p, paths
from pathlat.errors import DomainError
from pathlat.filling import (
    count_fillings,
    degree,
    degree_count,
    degree_formula,
    filling,
    filling_report,
    is_filling,
    low_fill,
    star_fill,
)
from pathlat.lattice import covers, join, leq
from pathlat.oracle import EnumFilter, brute_degree, enumerate_paths
from pathlat.path import Path, path_stats


def test_filling_examples():
    assert filling(p("dd")) == p("du")
    assert filling(p("dudu")) == p("udud")
    assert filling(Path.up(4)) == Path.up(4)
    assert filling(p("dduudududdd")) == p("dudu2dud3u")


def test_filling_is_join_of_covers():
    for n in range(10):
        for P in all_paths(n):
            cov = covers(P)
            expect = P
            for Q in cov:
                expect = join(expect, Q)
            assert filling(P) == expect


def test_low_fill_example():
    # valleys at heights -2, -1, -1, -3; only the endpoint one is lowest
    assert low_fill(p("dduudududdd")) == p("dduudududdu")


def test_star_fill_examples():
    assert star_fill(p("ud")) == p("ud")
    assert star_fill(p("uudd")) == p("uudd")
    assert star_fill(p("uduudd")) == p("uududd")
    assert star_fill(p("dd")) == p("dd")


@pytest.mark.parametrize("n", range(1, 9))
def test_degree_extremes(n):
    assert degree(Path.up(n)) == 0
    assert degree(Path.down(n)) == 2 * n - 1


def test_degree_small():
    assert degree(p("dd")) == 3
    assert degree(p("")) == 0
    assert degree(p("du")) == 2


def test_degree_formula_exhaustive():
    for n in range(13):
        for P in all_paths(n):
            assert degree(P) == degree_formula(P)
            if n <= 9:
                assert degree(P) == brute_degree(P)


def test_filling_report():
    rep = filling_report(p("dd"))
    assert rep.iterates == [p("dd"), p("du"), p("ud"), p("uu")]
    assert rep.degree == 3
    assert rep.filling == p("du")


def test_is_filling_examples():
    assert not is_filling(p("d"))
    assert is_filling(p("du"))
    assert not is_filling(p("uudduu"))
    assert is_filling(p(""))


def test_is_filling_matches_image():
    for n in range(11):
        image = set(enumerate_paths(n, EnumFilter.FILLING))
        assert {P for P in all_paths(n) if is_filling(P)} == image
        assert len(image) == count_fillings(n)


def test_count_fillings_values():
    assert [count_fillings(n) for n in range(8)] == [1, 1, 3, 5, 9, 17, 31, 57]
    with pytest.raises(DomainError):
        count_fillings(-1)


def test_degree_count_values():
    assert degree_count(2, 3) == 1
    assert degree_count(3, 3) == 3
    assert degree_count(4, 0) == 1
    with pytest.raises(DomainError):
        degree_count(3, 6)


def test_degree_count_sums_to_all_paths():
    for n in range(1, 16):
        assert sum(degree_count(n, k) for k in range(2 * n)) == 2 ** n


def test_degree_count_matches_tally():
    for n in range(1, 11):
        tally = {}
        for P in all_paths(n):
            tally[degree(P)] = tally.get(degree(P), 0) + 1
        assert tally == {k: degree_count(n, k) for k in range(2 * n) if degree_count(n, k)}


def test_filling_is_monotone():
    for n in range(8):
        ps = all_paths(n)
        for P in ps:
            assert leq(P, filling(P))
            for Q in ps:
                if leq(P, Q):
                    assert leq(filling(P), filling(Q))


def test_lowest_valley_rises_by_one():
    for n in range(11):
        for P in all_paths(n):
            lv = path_stats(P).lv
            nxt = path_stats(filling(P)).lv
            if lv is not None and nxt is not None:
                assert nxt == lv + 1


@given(paths(max_n=40))
def test_degree_formula_long(P):
    assert degree(P) == degree_formula(P)
