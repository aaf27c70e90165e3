import pytest
from hypothesis import given, strategies as st

from configserre.gl2 import HPoly
from configserre.laurent import Laurent
from configserre.motive import (
    ESClass,
    ESSymbol,
    MotiveClass,
    augment_level1,
    cusp_dim,
    es_substitute,
    euler_specialize,
    from_laurent,
    hodge_specialize,
    level1,
)

from strategies import hpoly


def _modular_forms_dim(k):
    # monomials E4^a E6^b of weight k
    return sum(1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k)


@pytest.mark.parametrize("k", range(2, 80))
def test_cusp_dimension_against_e4_e6_count(k):
    want = _modular_forms_dim(k) - 1 if k % 2 == 0 and k >= 4 else 0
    assert cusp_dim(k) == want


def lp(*coeffs):
    return Laurent({(i,): c for i, c in enumerate(coeffs) if c}, 1)


@pytest.mark.parametrize("k", range(0, 5))
def test_trivial_local_system_gives_a_power_of_L(k):
    assert level1(HPoly({0: Laurent.var(0, 1, k)})) == MotiveClass.L(k + 1)


def test_first_cusp_form():
    assert level1(HPoly({10: 1})) == MotiveClass({(0, None): -1, (0, 12): -1})
    assert level1(HPoly({1: 1})) == MotiveClass()
    assert level1(HPoly({2: 1})) == -MotiveClass.L(0)


def test_substitution_keeps_all_symbols():
    x = es_substitute(HPoly({1: 1}))
    assert x == ESClass({(0, ESSymbol("Sigma", 3)): -1, (0, ESSymbol("S", 3)): -1})
    assert augment_level1(x) == MotiveClass()
    with pytest.raises(ValueError):
        ESSymbol("T", 4)


@given(hpoly(max_n=12))
def test_hodge_at_one_is_euler(x):
    m = level1(x)
    assert hodge_specialize(m).evaluate([1]) == euler_specialize(m)


@given(hpoly(max_n=12), hpoly(max_n=12))
def test_level_one_is_additive(x, y):
    assert level1(x + y) == level1(x) + level1(y)


def test_rendering():
    assert str(MotiveClass({(2, None): 1, (0, None): -1})) == "L^2 - 1"
    assert str(MotiveClass()) == "0"
    assert str(-MotiveClass.S(12)) == "-S12"


@given(hpoly(max_n=14))
def test_json_round_trip(x):
    m = level1(x)
    assert MotiveClass.from_json(m.to_json()) == m


def test_arithmetic():
    a = MotiveClass.L(1) + 1
    assert a * a == MotiveClass({(2, None): 1, (1, None): 2, (0, None): 1})
    assert (MotiveClass.S(12) * MotiveClass.L(1)).terms == {(1, 12): 1}
    with pytest.raises(ValueError):
        MotiveClass({(-1, None): 1})


def test_vanishing_cusp_spaces_are_dropped():
    assert not MotiveClass({(0, 14): 3})


def test_from_laurent():
    x = Laurent({(1, 0): 2, (0, 1): -1}, 2)
    assert from_laurent(x, (12,)) == MotiveClass({(1, None): 2, (0, 12): -1})
    with pytest.raises(AssertionError):
        from_laurent(Laurent({(0, 2): 1}, 2), (12,))
