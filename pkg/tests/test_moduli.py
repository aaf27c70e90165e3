import math
from fractions import Fraction

import pytest

from configserre import gl2, reference
from configserre.laurent import Laurent
from configserre.moduli import (
    DON_POINTS,
    closed_form_series,
    level_n_series,
    level_n_table,
    m1n_row,
    m1n_table,
    nonequi_series,
    product_kernel,
    quotient_series,
    verify_don,
)
from configserre.motive import MotiveClass, euler_specialize, level1
from configserre.symfun import irrep_dim


def test_bounds():
    with pytest.raises(ValueError):
        level_n_series(9)
    with pytest.raises(ValueError):
        m1n_table(13)
    with pytest.raises(ValueError):
        m1n_table(0)


def test_first_row():
    row = level_n_table(1)[1]
    assert row == {(1,): gl2.HPoly({0: 1})}
    assert m1n_row(1).equivariant == {(1,): MotiveClass.L(1)}


@pytest.mark.parametrize("n", range(1, 8))
def test_level_n_rows_have_the_underlying_class_of_the_quotient(n):
    row = level_n_table(7)[n]
    total = Laurent._raw({}, 2)
    for lam, hp in row.items():
        total = total + gl2.from_h(hp) * irrep_dim(lam)
    assert total == reference.falling_product(n)


def test_product_kernel_is_divisible_by_e():
    for c in product_kernel(6).terms.values():
        gl2.divide_by_e(c)


@pytest.mark.parametrize("n", range(1, 13))
def test_rows_are_consistent(n):
    row = m1n_table(12)[n - 1]
    total = MotiveClass()
    for lam, m in row.equivariant.items():
        total = total + m * irrep_dim(lam)
    assert total == row.nonequivariant
    assert row.euler == euler_specialize(row.nonequivariant)


@pytest.mark.parametrize("n", range(5, 13))
def test_euler_characteristic_law(n):
    assert m1n_table(12)[n - 1].euler == Fraction((-1) ** n * math.factorial(n - 1), 12)


def test_small_euler_characteristics():
    # M_1,1 .. M_1,4 have Euler characteristic 1, 1, 0, 0
    assert [row.euler for row in m1n_table(4)] == [1, 1, 0, 0]


def test_m1_11():
    row = m1n_row(11)
    cusp = {k: v for k, v in row.nonequivariant.terms.items() if k[1] is not None}
    assert cusp == {(0, 12): -1}
    assert row.euler == -302400


def test_closed_form_route():
    closed = closed_form_series(12)
    for row in m1n_table(12):
        assert closed[row.n] == row.equivariant, row.n


def test_binomial_residue_route():
    noneq = nonequi_series(12)
    for row in m1n_table(12):
        assert noneq[row.n - 1] == row.nonequivariant


def test_residue_argument():
    rep = verify_don(12)
    assert rep.ok, rep.failures
    assert rep.simple_poles
    assert set(rep.residues) == set(DON_POINTS)
    assert sorted(set(rep.residues.values())) == [Fraction(-1, 2), Fraction(-1, 3), Fraction(1, 6)]
    with pytest.raises(ValueError):
        verify_don(4)


def test_quotient_series():
    rep = quotient_series(12)
    assert rep.ok, rep.checks
    assert rep.euler == reference.published_quotient_euler(12)
    assert rep.serre[1] == MotiveClass.L(1)
