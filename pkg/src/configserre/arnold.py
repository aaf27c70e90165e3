"""The Orlik-Solomon (Arnold) algebra of the braid arrangement, by brute force.

H*(F(C,n), Z) is the exterior algebra on degree-one classes w_ij = w_ji
(1 <= i < j <= n) modulo the three-term relations
w_ab w_bc + w_bc w_ca + w_ca w_ab = 0.  Normal forms use the broken-circuit
basis: products w_{i1 j1} ... w_{ir jr} with j1 < ... < jr.

A monomial is a tuple of edges (i, j) with i < j read left to right as an
ordered product; an :class:`OSElement` is an integer combination of NBC
monomials.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .numbers import factorial, mobius
from .partitions import (
    IntPartition,
    SetPartition,
    partitions_of,
    refines,
    set_partitions,
    stirling_first,
)
from .symfun import Character

DEFAULT_CAP = 8
Edge = tuple
Monomial = tuple


class SizeLimitError(ValueError):
    pass


def _check_cap(n: int, cap: int):
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the configured bound {cap}")


def edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError("w_ii is not a generator")
    return (i, j) if i < j else (j, i)


def is_nbc(m: Monomial) -> bool:
    return all(m[r][1] < m[r + 1][1] for r in range(len(m) - 1))


def components(n: int, m: Monomial) -> SetPartition:
    """Connected components of the forest with edge set m on vertices 1..n."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in m:
        parent[find(j)] = find(i)
    return SetPartition.from_labels([find(v) for v in range(1, n + 1)])


# -- elements -----------------------------------------------------------------------


@dataclass(frozen=True)
class OSElement:
    n: int
    terms: Mapping[Monomial, int] = field(default_factory=dict, hash=False)

    @classmethod
    def monomial(cls, n: int, m: Iterable[Edge], coeff: int = 1) -> "OSElement":
        """Normal form of the ordered product of the given edges."""
        return arnold_reduce(n, [edge(*e) for e in m]) * coeff

    @classmethod
    def one(cls, n: int) -> "OSElement":
        return cls(n, {(): 1})

    def __add__(self, other: "OSElement") -> "OSElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return OSElement(self.n, out)

    def __neg__(self):
        return OSElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return OSElement(self.n, {m: c * other for m, c in self.terms.items()} if other else {})
        if not isinstance(other, OSElement):
            return NotImplemented
        out = OSElement(self.n)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + arnold_reduce(self.n, m1 + m2) * (c1 * c2)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, OSElement):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "".join(f"w{i}{j}" if self.n < 10 else f"w({i},{j})" for i, j in m) or "1"
            parts.append(f"{c:+d}*{mono}" if abs(c) != 1 else ("+" if c > 0 else "-") + mono)
        return " ".join(parts).lstrip("+")


# -- basis -----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _os_basis(n: int, k: int) -> tuple[Monomial, ...]:
    degree = n - k
    out = []
    for tops in itertools.combinations(range(2, n + 1), degree):
        for lows in itertools.product(*(range(1, j) for j in tops)):
            out.append(tuple(zip(lows, tops)))
    return tuple(out)


def os_basis(n: int, k: int, cap: int = DEFAULT_CAP) -> list[Monomial]:
    """NBC monomials of degree n-k; there are |s(n,k)| of them."""
    _check_cap(n, cap)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return list(_os_basis(n, k))


# -- reduction ----------------------------------------------------------------------------


def _sort_sign(m: Sequence[Edge]) -> tuple[int, Monomial]:
    """Sort edges by (j, i), returning the sign of the sorting permutation (0 on repeats)."""
    m = list(m)
    if len(set(m)) != len(m):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(m)):
        b = a
        while b > 0 and (m[b - 1][1], m[b - 1][0]) > (m[b][1], m[b][0]):
            m[b - 1], m[b] = m[b], m[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(m)


def _rewrite_pair(ea: Edge, eb: Edge) -> list[tuple[int, Edge, Edge]]:
    """w_ea w_eb for two edges sharing their top vertex, as a signed sum of products."""
    (a, c), (b, c2) = ea, eb
    assert c == c2 and a != b
    if a < b:
        # w_ac w_bc = w_ab w_bc - w_ab w_ac
        return [(1, (a, b), (b, c)), (-1, (a, b), (a, c))]
    # w_ac w_bc = -w_bc w_ac, then the same rule with a and b swapped
    return [(-1, (b, a), (a, c)), (1, (b, a), (b, c))]


@lru_cache(maxsize=200_000)
def _normal_form_sorted(m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    # m is sorted by (j, i) with no repeated edges
    for r in range(len(m) - 1):
        if m[r][1] == m[r + 1][1]:
            out: dict = {}
            for s, e1, e2 in _rewrite_pair(m[r], m[r + 1]):
                sign, sm = _sort_sign(m[:r] + (e1, e2) + m[r + 2:])
                if not sign:
                    continue
                for mono, c in _normal_form_sorted(sm):
                    v = out.get(mono, 0) + s * sign * c
                    if v:
                        out[mono] = v
                    else:
                        out.pop(mono, None)
            return tuple(sorted(out.items()))
    return ((m, 1),)


def _random_reduce(m: Sequence[Edge], rng: random.Random) -> dict:
    todo: dict = {tuple(m): 1}
    done: dict = {}
    while todo:
        mono, coeff = todo.popitem()
        if len(set(mono)) != len(mono):
            continue
        conflicts = [
            (p, q) for p in range(len(mono)) for q in range(p + 1, len(mono)) if mono[p][1] == mono[q][1]
        ]
        if not conflicts:
            sign, sm = _sort_sign(mono)
            done[sm] = done.get(sm, 0) + sign * coeff
            continue
        p, q = rng.choice(conflicts)
        # bring factor q next to factor p
        lst = list(mono)
        e = lst.pop(q)
        lst.insert(p + 1, e)
        sign = (-1) ** (q - p - 1)
        for s, e1, e2 in _rewrite_pair(lst[p], lst[p + 1]):
            new = tuple(lst[:p] + [e1, e2] + lst[p + 2:])
            todo[new] = todo.get(new, 0) + sign * s * coeff
    return {k: v for k, v in done.items() if v}


def arnold_reduce(n: int, m: Sequence[Edge], rng: random.Random | None = None) -> OSElement:
    """NBC normal form of the ordered product of generators m.

    The default strategy always rewrites the first pair of factors sharing a
    top vertex after sorting; passing ``rng`` picks conflicting pairs at
    random instead (used to test confluence).
    """
    m = tuple(edge(*e) for e in m)
    for i, j in m:
        if not 1 <= i < j <= n:
            raise ValueError(f"edge {(i, j)} is not on vertices 1..{n}")
    if rng is not None:
        return OSElement(n, _random_reduce(m, rng))
    sign, sm = _sort_sign(m)
    if not sign:
        return OSElement(n)
    return OSElement(n, {mono: sign * c for mono, c in _normal_form_sorted(sm)})


def relabel(sigma: Sequence[int], m: Monomial) -> Monomial:
    return tuple(edge(sigma[i - 1], sigma[j - 1]) for i, j in m)


def sn_act(sigma: Sequence[int], x: OSElement) -> OSElement:
    """sigma . w_ij = w_{sigma(i) sigma(j)}; sigma is in one-line notation."""
    if sorted(sigma) != list(range(1, x.n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{x.n}")
    out = OSElement(x.n)
    for m, c in x.terms.items():
        out = out + arnold_reduce(x.n, relabel(sigma, m)) * c
    return out


def nbc_coefficient(n: int, x: Monomial, target: Monomial) -> int:
    """Coefficient of the NBC monomial ``target`` in the normal form of the product x.

    Peels off the top vertex c = n, n-1, ..., 2 by taking residues along
    z_c = z_a, where (a, c) is the edge of ``target`` at c.  This is the
    fibration F(C, c) -> F(C, c-1) read off in cohomology, and needs no
    rewriting at all.
    """
    x = list(x)
    t = list(target)
    sign = 1
    for c in range(n, 1, -1):
        at_c = [r for r, (i, j) in enumerate(x) if j == c]
        if t and t[-1][1] == c:
            a = t.pop()[0]
            hits = [r for r in at_c if x[r][0] == a]
            if len(hits) != 1:
                return 0
            r = hits[0]
            sign *= (-1) ** (len(x) - 1 - r)
            del x[r]
            new = []
            for i, j in x:
                new.append(edge(i, a) if j == c else (i, j))
            if len(set(new)) != len(new):
                return 0
            x = new
        elif at_c:
            return 0
    return sign if not x else 0


# -- components and characters --------------------------------------------------------------


@dataclass(frozen=True)
class OSComponent:
    J: SetPartition
    basis: tuple[Monomial, ...]


def component_decompose(n: int, k: int, cap: int = DEFAULT_CAP) -> list[OSComponent]:
    """Split the NBC basis of degree n-k by the set partition each forest induces."""
    groups: dict = {J: [] for J in set_partitions(n, k)}
    for m in os_basis(n, k, cap):
        groups[components(n, m)].append(m)
    out = [OSComponent(J, tuple(b)) for J, b in groups.items()]
    for comp in out:
        expected = 1
        for b in comp.J.blocks:
            expected *= factorial(len(b) - 1)
        assert len(comp.basis) == expected, comp.J
    return out


def permutation_of_type(mu: IntPartition) -> tuple[int, ...]:
    """A permutation of 1..|mu| with cycle type mu, in one-line notation."""
    n = sum(mu)
    sigma = [0] * n
    start = 1
    for part in mu:
        cyc = list(range(start, start + part))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a - 1] = b
        start += part
    return tuple(sigma)


def trace(sigma: Sequence[int], n: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Trace of sigma on the degree n-k piece, summed over sigma-stable components only."""
    total = 0
    for comp in component_decompose(n, k, cap):
        if comp.J.act(sigma) != comp.J:
            continue
        for m in comp.basis:
            total += nbc_coefficient(n, relabel(sigma, m), m)
    return total


def trace_by_reduction(sigma: Sequence[int], n: int, k: int) -> int:
    """Same trace through full Arnold reduction (slow oracle)."""
    total = 0
    for m in os_basis(n, k):
        total += arnold_reduce(n, relabel(sigma, m)).terms.get(m, 0)
    return total


def character_of(n: int, k: int, cap: int = DEFAULT_CAP) -> Character:
    """Trace character of S_n on H^{n-k}(F(C,n)) = s(n,k)."""
    _check_cap(n, cap)
    return Character(n, {mu: trace(permutation_of_type(mu), n, k, cap) for mu in partitions_of(n)})


def euler_character(n: int, k: int, cap: int = DEFAULT_CAP) -> Character:
    """(-1)^{n-k} times the trace: the equivariant Euler characteristic of the graded piece."""
    chi = character_of(n, k, cap)
    s = (-1) ** (n - k)
    return Character(n, {mu: s * v for mu, v in chi.values.items()})


def hanlon_stanley(n: int) -> Character:
    """Closed form for the Euler character of l(n) = s(n,1)."""
    values = {}
    for mu in partitions_of(n):
        d = mu[0]
        if all(p == d for p in mu):
            m = n // d
            values[mu] = -mobius(d) * (-d) ** m * factorial(m) // n
        else:
            values[mu] = 0
    return Character(n, values)


# -- the circle differential -------------------------------------------------------------------


def differential(x: OSElement) -> OSElement:
    """Degree -1 derivation with d(w_ij) = 1.

    On a monomial it omits one factor at a time with the Koszul sign, so NBC
    monomials go to sums of NBC monomials and no reduction is needed.
    """
    out: dict = {}
    for m, c in x.terms.items():
        for r in range(len(m)):
            mono = m[:r] + m[r + 1:]
            v = out.get(mono, 0) + (-1) ** r * c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return OSElement(x.n, out)


def differential_matrix(n: int, degree: int) -> tuple[list[Monomial], list[Monomial], dict]:
    """Sparse matrix of d: H^degree -> H^{degree-1} as {(row, col): value}."""
    src = os_basis(n, n - degree)
    tgt = os_basis(n, n - degree + 1)
    index = {m: i for i, m in enumerate(tgt)}
    entries = {}
    for col, m in enumerate(src):
        for mono, c in differential(OSElement(n, {m: 1})).terms.items():
            entries[(index[mono], col)] = c
    return src, tgt, entries


RANK_PRIME = 2_147_483_647


def rank_mod_p(entries: Mapping[tuple[int, int], int], p: int = RANK_PRIME) -> int:
    """Rank over GF(p) of a sparse integer matrix by row elimination."""
    rows: dict[int, dict[int, int]] = {}
    for (r, c), v in entries.items():
        if v % p:
            rows.setdefault(r, {})[c] = v % p
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows.values():
        while row:
            col = min(row)
            if col not in pivots:
                inv = pow(row[col], p - 2, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                rank += 1
                break
            factor = row[col]
            for c, v in pivots[col].items():
                w = (row.get(c, 0) - factor * v) % p
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
    return rank


@dataclass
class AcyclicReport:
    n: int
    dims: list[int]
    ranks: list[int]
    homology: list[int]
    d_squared_zero: bool
    homotopy_ok: bool

    @property
    def exact(self) -> bool:
        return self.d_squared_zero and self.homotopy_ok and not any(self.homology)


def check_acyclic(n: int, cap: int = DEFAULT_CAP, homotopy: bool = True) -> AcyclicReport:
    """Ranks and homology of (H*(F(C,n)), d), plus the homotopy dH + Hd = id.

    ranks[d] is the rank of d: H^d -> H^{d-1} (computed mod a large prime);
    if those ranks already make the complex exact mod p they do so over Q,
    because d o d = 0 bounds the rational ranks from above.
    """
    _check_cap(n, cap)
    if n < 2:
        raise ValueError("the complex is only acyclic for n >= 2")
    dims = [len(os_basis(n, n - d)) for d in range(n)]
    ranks = [0] * (n + 1)
    d_sq = True
    for d in range(1, n):
        _, _, entries = differential_matrix(n, d)
        ranks[d] = rank_mod_p(entries)
    for d in range(2, n):
        for m in os_basis(n, n - d):
            if differential(differential(OSElement(n, {m: 1}))):
                d_sq = False
    homology = [dims[d] - ranks[d] - ranks[d + 1] for d in range(n)]
    h_ok = True
    if homotopy:
        w12 = OSElement(n, {((1, 2),): 1})
        for d in range(n):
            for m in os_basis(n, n - d):
                x = OSElement(n, {m: 1})
                lhs = differential(w12 * x) + w12 * differential(x)
                if lhs != x:
                    h_ok = False
    return AcyclicReport(n, dims, ranks[1:n], homology, d_sq, h_ok)


def check_refinement(n: int, cap: int = DEFAULT_CAP) -> list[tuple[SetPartition, SetPartition]]:
    """All (J, K) with a nonzero block d_JK where K is not finer than J (expected: none)."""
    _check_cap(n, cap)
    bad = []
    for k in range(1, n):
        for comp in component_decompose(n, k, cap):
            for m in comp.basis:
                for mono in differential(OSElement(n, {m: 1})).terms:
                    K = components(n, mono)
                    if not (refines(K, comp.J) and K != comp.J):
                        bad.append((comp.J, K))
    return bad


def basis_count_matches(n: int) -> bool:
    return all(len(os_basis(n, k)) == abs(stirling_first(n, k)) for k in range(1, n + 1))
