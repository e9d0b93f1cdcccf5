import pytest

from conftest import p
from pathlat.errors import LimitExceeded
from pathlat.oracle import (
    EnumFilter,
    brute_degree,
    brute_f,
    brute_interval_count,
    enumerate_paths,
    shortest_small_chain,
)
from pathlat.path import Path


def test_enumerate_counts():
    assert len(list(enumerate_paths(4))) == 16
    assert [P.steps for P in enumerate_paths(2)] == ["dd", "du", "ud", "uu"]
    assert [P.steps for P in enumerate_paths(4, EnumFilter.DYCK_PATH)] == ["udud", "uudd"]
    assert len(list(enumerate_paths(5, EnumFilter.DYCK_PREFIX))) == 10
    assert len(list(enumerate_paths(4, EnumFilter.FILLING))) == 9
    assert [P.steps for P in enumerate_paths(2, EnumFilter.degree_equals(3))] == ["dd"]


def test_limits():
    with pytest.raises(LimitExceeded):
        list(enumerate_paths(17))
    with pytest.raises(LimitExceeded):
        brute_f(Path.down(11))
    with pytest.raises(LimitExceeded):
        brute_interval_count(Path.down(20), Path.up(20))


def test_brute_helpers():
    assert brute_degree(p("dd")) == 3
    assert shortest_small_chain(p("dd")) == 3
    assert brute_f(p("dd")) == 1
    assert brute_interval_count(p(""), p("")) == 1
    assert brute_interval_count(p("dd"), p("uu")) == 4
