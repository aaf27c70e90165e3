import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from configserre.laurent import Laurent
from configserre.numbers import mobius
from configserre.partitions import partitions_of, z_lambda
from configserre.symfun import (
    Character,
    Exp,
    FreeLambdaClass,
    Log,
    SymSeries,
    TruncationError,
    character_from_ch,
    exp_op,
    frobenius_ch,
    h,
    irrep_dim,
    log_one_plus_p,
    log_op,
    p_to_schur,
    schur,
    schur_op,
    schur_to_p,
    sn_character,
)

N = 5
u = Laurent.var(0, 1)


def coeffs():
    # one-variable Laurent coefficients, so that psi_d acts nontrivially
    return st.dictionaries(st.integers(min_value=-2, max_value=2).map(lambda k: (k,)), st.integers(-3, 3), max_size=2).map(
        lambda d: Laurent(d, 1)
    )


def partitions_up_to(n):
    return st.sampled_from([lam for k in range(1, n + 1) for lam in partitions_of(k)])


def series(max_terms=4, degree=N):
    return st.dictionaries(partitions_up_to(degree), coeffs(), max_size=max_terms).map(lambda d: SymSeries(d, degree))


# -- characters --------------------------------------------------------------------------------------


def _frobenius_character(lam, mu):
    """chi^lam(mu) as the coefficient of x^(lam + delta) in a_delta * p_mu (plain polynomial arithmetic)."""
    l = len(lam)
    delta = tuple(range(l - 1, -1, -1))
    poly = {}
    for perm in itertools.permutations(range(l)):
        sign = (-1) ** sum(1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j])
        poly[tuple(delta[perm[i]] for i in range(l))] = sign
    for part in mu:
        new = {}
        for e, c in poly.items():
            for i in range(l):
                f = list(e)
                f[i] += part
                f = tuple(f)
                new[f] = new.get(f, 0) + c
        poly = new
    target = tuple(lam[i] + delta[i] for i in range(l))
    return poly.get(target, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_match_frobenius_formula(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert sn_character(lam, mu) == _frobenius_character(lam, mu)


def _hook_dim(lam):
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])]
    hooks = math.prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return math.factorial(n) // hooks


@pytest.mark.parametrize("n", range(1, 11))
def test_dimensions_are_hook_lengths(n):
    for lam in partitions_of(n):
        assert irrep_dim(lam) == _hook_dim(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    ps = partitions_of(n)
    for mu in ps:
        for nu in ps:
            s = sum(sn_character(lam, mu) * sn_character(lam, nu) for lam in ps)
            assert s == (z_lambda(mu) if mu == nu else 0)


def test_character_inner_product():
    chi = Character(3, {mu: sn_character((2, 1), mu) for mu in partitions_of(3)})
    assert chi.inner(chi) == 1


# -- series ------------------------------------------------------------------------------------------


@settings(max_examples=200)
@given(series())
def test_exp_log_round_trip(x):
    x = x - x.constant_term()
    assert Log(Exp(x)) == x
    y = x + 1
    assert Exp(Log(y)) == y


@settings(max_examples=200)
@given(series(), series())
def test_exp_turns_sums_into_products(a, b):
    a, b = a - a.constant_term(), b - b.constant_term()
    assert Exp(a + b) == Exp(a) * Exp(b)


@settings(max_examples=200)
@given(series(), series(), st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
def test_adams_multiplicative(a, b, d, e):
    assert (a * b).adams(d) == a.adams(d) * b.adams(d)
    assert (a + b).adams(d) == a.adams(d) + b.adams(d)
    assert a.adams(d).adams(e) == a.adams(d * e)


@given(series())
def test_ordinary_exp_log(x):
    x = x - x.constant_term()
    assert log_op(exp_op(x)) == x


def schur_maps(max_deg=9):
    return st.dictionaries(partitions_up_to(max_deg), st.integers(-5, 5), min_size=1, max_size=6)


@settings(max_examples=200)
@given(schur_maps())
def test_schur_power_sum_round_trip(coeffs):
    coeffs = {lam: c for lam, c in coeffs.items() if c}
    x = schur_to_p(coeffs, 9)
    back = {lam: c for deg in p_to_schur(x).values() for lam, c in deg.items()}
    assert back == coeffs


def test_exp_of_p1_is_sum_of_h():
    N = 7
    total = SymSeries.constant(1, N)
    for n in range(1, N + 1):
        total = total + h(n, N)
    assert Exp(SymSeries.power_sum(1, N)) == total


def test_log_of_one_plus_p1():
    # Log(1 + p_1) = sum_n mu(n)/n log(1 + p_n)
    N = 8
    want = SymSeries({}, N)
    for n in range(1, N + 1):
        if mobius(n):
            want = want + log_one_plus_p(n, N, Fraction(mobius(n), n))
    assert Log(SymSeries({(): 1, (1,): 1}, N)) == want


def test_schur_functions_are_orthonormal_under_conversion():
    N = 6
    for lam in partitions_of(N):
        got = p_to_schur(schur(lam, N))[N]
        assert got == {lam: 1}


def test_frobenius_round_trip():
    for lam in partitions_of(5):
        chi = Character(5, {mu: sn_character(lam, mu) for mu in partitions_of(5)})
        assert character_from_ch(frobenius_ch(chi), 5).values == chi.values


def test_truncation_is_enforced():
    with pytest.raises(TruncationError):
        SymSeries({(3, 3): 1}, 5)
    with pytest.raises(TruncationError):
        SymSeries({(1,): 1}, 3) + SymSeries({(1,): 1}, 4)


def test_adams_marks_lost_terms():
    x = SymSeries({(3,): 1}, 4)
    assert x.adams(2).lossy and not x.adams(1).lossy


# -- Schur operations ----------------------------------------------------------------------------------


def test_schur_operations_on_a_sum_of_line_elements():
    a, b = Laurent({(1, 0): 1}, 2), Laurent({(0, 1): 1}, 2)
    x = a + b
    assert schur_op((2,), x) == a * a + a * b + b * b
    assert schur_op((1, 1), x) == a * b
    assert schur_op((2, 1), x) == a * a * b + a * b * b
    assert schur_op((1, 1, 1), x) == 0


@given(st.integers(min_value=-6, max_value=12), st.integers(min_value=1, max_value=5))
def test_exterior_and_symmetric_powers_of_integers(c, n):
    # on the binomial lambda-ring Z: sigma_n(c) = C(c+n-1, n), sigma_{1^n}(c) = C(c, n)
    assert schur_op((n,), c) == Fraction(math.prod(c + j for j in range(n)), math.factorial(n))
    assert schur_op((1,) * n, c) == Fraction(math.prod(c - j for j in range(n)), math.factorial(n))


def test_free_lambda_class_sigma_basis_round_trip():
    E1, E2 = FreeLambdaClass.E(1), FreeLambdaClass.E(2)
    x = schur_op((2, 1), E1) * E2 - schur_op((1, 1), E2) + 3
    basis = x.to_sigma_basis()
    assert basis == {((1, (2, 1)), (2, (1,))): 1, ((2, (1, 1)),): -1, (): 3}
    assert FreeLambdaClass.from_sigma_basis(basis) == x
