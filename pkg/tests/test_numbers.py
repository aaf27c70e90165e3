import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from configserre.numbers import (
    ZETA,
    CycloNum,
    as_rat,
    binomial,
    cyclo_eval,
    cyclo_invert,
    divisors,
    factorial,
    mobius,
)


def test_mobius_small_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


@given(st.integers(min_value=1, max_value=400))
def test_mobius_sums_over_divisors(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(min_value=1, max_value=400))
def test_divisors_match_trial_division(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_factorial_matches_math():
    assert [factorial(n) for n in range(15)] == [math.factorial(n) for n in range(15)]


@given(st.integers(min_value=-20, max_value=20), st.integers(min_value=0, max_value=10))
def test_binomial_of_integers(x, k):
    # generalized binomial: x(x-1)...(x-k+1)/k!
    want = Fraction(math.prod(x - j for j in range(k)), math.factorial(k))
    assert binomial(x, k) == want


def test_as_rat_normalizes():
    assert as_rat(Fraction(6, 3)) == 2 and isinstance(as_rat(Fraction(6, 3)), int)
    assert as_rat(Fraction(1, 2)) == Fraction(1, 2)


def test_zeta_has_order_12():
    powers = [ZETA ** k for k in range(13)]
    assert powers[12] == CycloNum(1)
    assert all(p != CycloNum(1) for p in powers[1:12])


def test_cyclotomic_relation():
    t = ZETA
    assert t ** 4 == t ** 2 - 1


def test_inverse_on_random_samples():
    rng = random.Random(20240612)
    for _ in range(500):
        z = CycloNum(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)))
        if z == CycloNum(0):
            continue
        assert z * cyclo_invert(z) == CycloNum(1)


def test_negative_powers_and_division():
    z = ZETA ** 5 + 2
    assert z ** -2 * z ** 2 == CycloNum(1)
    assert (z / z) == CycloNum(1)


def test_eval_polynomial_at_root_of_unity():
    # 1 - w^12 vanishes at every twelfth root of unity
    p = [1] + [0] * 11 + [-1]
    for k in range(12):
        assert cyclo_eval(p, ZETA ** k) == CycloNum(0)
    # Phi_12 = w^4 - w^2 + 1 vanishes exactly at the primitive ones
    phi12 = [1, 0, -1, 0, 1]
    zeros = [k for k in range(12) if cyclo_eval(phi12, ZETA ** k) == CycloNum(0)]
    assert zeros == [1, 5, 7, 11]


@pytest.mark.parametrize("k", range(12))
def test_conjugate_pairs_sum_to_real(k):
    s = ZETA ** k + ZETA ** (12 - k)
    # 2 cos(2 pi k/12) lies in Q(sqrt 3); its square is rational
    sq = s * s
    assert (sq.c1, sq.c2, sq.c3) == (0, 0, 0)
