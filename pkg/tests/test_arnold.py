import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from configserre import arnold
from configserre.arnold import (
    OSElement,
    arnold_reduce,
    check_acyclic,
    check_refinement,
    character_of,
    euler_character,
    hanlon_stanley,
    os_basis,
    permutation_of_type,
    trace,
    trace_by_reduction,
)
from configserre.configspace import lie_ch
from configserre.laurent import Laurent
from configserre.partitions import partitions_of, stirling_first
from configserre.symfun import Exp, SymSeries, frobenius_ch


@pytest.mark.parametrize("n", range(1, 9))
def test_basis_counts_are_stirling_numbers(n):
    assert arnold.basis_count_matches(n)
    assert sum(len(os_basis(n, k)) for k in range(1, n + 1)) == math.factorial(n)


# -- independent oracle: exterior algebra modulo the three-term relations ----------------------------------


def _wedge(a, b):
    """Product of two sorted exterior monomials: (sign, monomial) or None."""
    if set(a) & set(b):
        return None
    seq = list(a) + list(b)
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return (-1) ** inversions, tuple(sorted(seq))


def _rank(rows):
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            f = row[col] / pivots[col][col]
            for k, v in pivots[col].items():
                x = row.get(k, 0) - f * v
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    return rank


def _quotient_dim(n, degree):
    gens = list(itertools.combinations(range(1, n + 1), 2))
    total = len(list(itertools.combinations(range(len(gens)), degree)))
    if degree < 2:
        return total
    idx = {g: i for i, g in enumerate(gens)}
    rels = []
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        rel = {}
        for x, y in (((a, b), (b, c)), ((b, c), (a, c)), ((a, c), (a, b))):
            # w_ab w_bc + w_bc w_ca + w_ca w_ab with w_ca = w_ac
            s, m = _wedge((idx[x],), (idx[y],))
            rel[m] = rel.get(m, 0) + s
        rels.append(rel)
    rows = []
    for rel in rels:
        for mono in itertools.combinations(range(len(gens)), degree - 2):
            row = {}
            for m, c in rel.items():
                p = _wedge(m, mono)
                if p:
                    row[p[1]] = row.get(p[1], 0) + c * p[0]
            rows.append(row)
    return total - _rank(rows)


@pytest.mark.parametrize("n", range(2, 5))
def test_exterior_algebra_oracle(n):
    for degree in range(0, n):
        assert _quotient_dim(n, degree) == len(os_basis(n, n - degree)) == abs(stirling_first(n, n - degree))


# -- reduction ------------------------------------------------------------------------------------------------


def test_three_term_relation_reduces_to_zero():
    for a, b, c in itertools.permutations(range(1, 5), 3):
        x = arnold_reduce(4, (arnold.edge(a, b), arnold.edge(b, c)))
        y = arnold_reduce(4, (arnold.edge(b, c), arnold.edge(c, a)))
        z = arnold_reduce(4, (arnold.edge(c, a), arnold.edge(a, b)))
        assert not (x + y + z)


def _monomials(n, k):
    edges = list(itertools.combinations(range(1, n + 1), 2))
    return st.lists(st.sampled_from(edges), min_size=k, max_size=k, unique=True)


@settings(max_examples=200)
@given(st.integers(min_value=3, max_value=6).flatmap(lambda n: st.tuples(st.just(n), _monomials(n, min(3, n - 1)))), st.integers(0, 10**6))
def test_reduction_is_confluent(nm, seed):
    n, m = nm
    assert arnold_reduce(n, tuple(m), rng=random.Random(seed)) == arnold_reduce(n, tuple(m))


def test_cycles_vanish():
    # a monomial whose edges contain a cycle is zero
    assert not arnold_reduce(4, ((1, 2), (2, 3), (1, 3)))
    assert not arnold_reduce(5, ((1, 2), (2, 3), (3, 4), (1, 4)))


@pytest.mark.parametrize("n", range(2, 6))
def test_traces_by_two_routes(n):
    for k in range(1, n + 1):
        for mu in partitions_of(n):
            sigma = permutation_of_type(mu)
            assert trace(sigma, n, k) == trace_by_reduction(sigma, n, k)


def test_permutation_of_type():
    assert permutation_of_type((3, 1)) == (2, 3, 1, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_hanlon_stanley(n):
    assert euler_character(n, 1).values == hanlon_stanley(n).values


def test_identity_trace_is_dimension_and_euler_carries_sign():
    chi = character_of(4, 1)
    assert chi((1, 1, 1, 1)) == 6
    assert euler_character(4, 1)((1, 1, 1, 1)) == -6


@pytest.mark.parametrize("n", range(1, 8))
def test_lie_characters_match_top_degree(n):
    assert lie_ch(n, n) == frobenius_ch(euler_character(n, 1), n)


def test_lehrer_solomon_composition():
    # Exp(u sum_n ch eps(l(n))) has the Euler character of H^{n-k} as its u^k coefficient
    N = 7
    u = Laurent.var(0, 1)
    total = SymSeries({}, N)
    for n in range(1, N + 1):
        total = total + frobenius_ch(euler_character(n, 1), N).scale(u)
    series = Exp(total)
    for n in range(1, N + 1):
        part = series.degree_part(n)
        for k in range(1, n + 1):
            want = frobenius_ch(euler_character(n, k), N)
            got = SymSeries({lam: c.terms.get((k,), 0) if isinstance(c, Laurent) else 0 for lam, c in part.terms.items()}, N)
            assert got == want, (n, k)


@pytest.mark.parametrize("n", range(2, 8))
def test_circle_differential_is_acyclic(n):
    rep = check_acyclic(n, homotopy=n <= 6)
    assert rep.exact, rep


@pytest.mark.parametrize("n", range(2, 7))
def test_differential_refines_components(n):
    assert check_refinement(n) == []


def test_size_cap():
    with pytest.raises(arnold.SizeLimitError):
        os_basis(9, 1)
    assert len(os_basis(9, 8, cap=9)) == 36


def test_sn_action_is_an_algebra_map():
    sigma = (2, 3, 1, 4)
    x = OSElement.monomial(4, [(1, 2)])
    y = OSElement.monomial(4, [(2, 4)])
    assert arnold.sn_act(sigma, x * y) == arnold.sn_act(sigma, x) * arnold.sn_act(sigma, y)


def test_differential_examples():
    d = arnold.differential
    assert d(OSElement.monomial(2, [(1, 2)])) == OSElement.one(2)
    assert not d(OSElement.one(3))
    assert d(OSElement.monomial(3, [(1, 2), (1, 3)])) == OSElement.monomial(3, [(1, 3)]) - OSElement.monomial(3, [(1, 2)])


def test_small_complexes():
    rep = check_acyclic(3)
    assert rep.dims[::-1] == [2, 3, 1]
    assert rep.ranks == [1, 2]
    assert check_acyclic(2).dims == [1, 1]


def test_transposition_acts_with_a_sign():
    x = OSElement.monomial(3, [(1, 2), (1, 3)])
    assert arnold.sn_act((1, 3, 2), x) == -x


def test_component_examples():
    comps = arnold.component_decompose(3, 2)
    assert all(len(c.J.blocks) == 2 for c in comps)
    assert len(comps) == 3 and all(len(c.basis) == 1 for c in comps)
    (top,) = arnold.component_decompose(4, 1)
    assert len(top.basis) == 6


def test_character_examples():
    assert character_of(3, 1)((3,)) == -1
    assert character_of(4, 1)((2, 1, 1)) == 0
