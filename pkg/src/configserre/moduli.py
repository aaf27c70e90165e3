"""S_n-equivariant Serre characteristics of M_{1,n}.

Three independent routes are kept apart on purpose:

* the torsor quotient at level N, expanded in the H_k basis, followed by the
  Eichler-Shimura substitution and the level-one augmentation;
* a residue at w = 0 against the Eichler-Shimura generating factor, applied
  directly to the kernel in the root variable w;
* for the non-equivariant column, the same residue with p_n (n > 1) set to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import gl2
from .configspace import torsor_serre
from .laurent import Laurent
from .motive import MotiveClass, cusp_dim, euler_specialize, from_laurent, level1
from .numbers import CycloNum, as_rat, binomial, cyclo_eval, divisors, factorial, mobius
from .partitions import IntPartition, partitions_of
from .symfun import SymSeries, irrep_dim, p_to_schur, specialize

LEVEL_N_BOUND = 8
TABLE_BOUND = 12


def _check_bound(N: int, bound: int):
    if N < 1:
        raise ValueError("N must be at least 1")
    if N > bound:
        raise ValueError(f"N = {N} exceeds the configured bound {bound}")


# -- level N ------------------------------------------------------------------------------


@lru_cache(maxsize=None)
def product_kernel(N: int) -> SymSeries:
    """prod_k (1 + p_k)^{(1/k) sum_{d|k} mu(k/d) psi_d(1 - H + L)} - 1, before dividing."""
    e = gl2.E_class()
    total = SymSeries.constant(1, N)
    for k in range(1, N + 1):
        a = Laurent._raw({}, 2)
        for d in divisors(k):
            mu = mobius(k // d)
            if mu:
                a = a + e.adams(d) * mu
        a = a * Fraction(1, k)
        factor = {(): 1}
        for j in range(1, N // k + 1):
            factor[(k,) * j] = binomial(a, j)
        total = total * SymSeries(factor, N)
    return total - 1


@lru_cache(maxsize=None)
def _level_n(N: int) -> SymSeries:
    via_exp = torsor_serre(gl2.E_class(), N)
    num = product_kernel(N)
    via_product = SymSeries({lam: gl2.divide_by_e(c) for lam, c in num.terms.items()}, N)
    if via_exp != via_product:
        raise AssertionError("torsor quotient and product formula disagree")
    return via_exp


def level_n_series(N: int, bound: int = LEVEL_N_BOUND) -> SymSeries:
    """The level-N generating series in the power-sum basis, GL(2) coefficients."""
    _check_bound(N, bound)
    return _level_n(N)


def level_n_table(N: int, bound: int = LEVEL_N_BOUND) -> dict[int, dict[IntPartition, gl2.HPoly]]:
    """Rows n = 1..N as Schur coefficient -> sum_k c_k(L) H_k."""
    _check_bound(N, bound)
    return {n: dict(row) for n, row in _level_n_table(N).items()}


@lru_cache(maxsize=None)
def _level_n_table(N: int) -> dict:
    series = _level_n(N)
    out = {}
    for n, coeffs in p_to_schur(series).items():
        if n == 0:
            continue
        row = {}
        for lam, c in coeffs.items():
            hp = gl2.h_basis(c)
            if not hp.is_integral():
                raise AssertionError(f"non-integral H-expansion at {lam}")
            row[lam] = hp
        out[n] = row
    return out


# -- level one ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuliTableRow:
    n: int
    equivariant: dict[IntPartition, MotiveClass] = field(default_factory=dict)
    nonequivariant: MotiveClass = field(default_factory=MotiveClass)
    euler: int = 0


def _nonequivariant_from_p(series: SymSeries, n: int) -> MotiveClass:
    # p_1 -> x, p_k -> 0 (k > 1): the S_n-module's underlying class is n! [p_1^n]
    c = series.coefficient((1,) * n) * factorial(n)
    return level1(gl2.h_basis(c))


def m1n_table(N: int, bound: int = TABLE_BOUND) -> list[ModuliTableRow]:
    """Rows n = 1..N: Schur expansion, underlying class and Euler characteristic."""
    _check_bound(N, bound)
    return list(_m1n_table(N))


@lru_cache(maxsize=None)
def _m1n_table(N: int) -> tuple[ModuliTableRow, ...]:
    series = _level_n(N)
    table = _level_n_table(N)
    rows = []
    for n in range(1, N + 1):
        eq = {}
        for lam, hp in table[n].items():
            m = level1(hp)
            if m:
                eq[lam] = m
        noneq = _nonequivariant_from_p(series, n)
        by_dims = MotiveClass()
        for lam, m in eq.items():
            by_dims = by_dims + m * irrep_dim(lam)
        if by_dims != noneq:
            raise AssertionError(f"row {n}: Schur expansion and underlying class disagree")
        rows.append(ModuliTableRow(n, eq, noneq, euler_specialize(noneq)))
    return tuple(rows)


def m1n_row(n: int, bound: int = TABLE_BOUND) -> ModuliTableRow:
    return m1n_table(n, bound)[n - 1]


# -- residue routes -------------------------------------------------------------------------------


def _es_factor(kmax: int, extra: int) -> tuple[Laurent, tuple[int, ...]]:
    """sum_{k=1}^{kmax} (S_{2k+2} + 1) L^{-(2k+1)} w^{2k} - 1 in variables (w, L, S_4, ..., S_{2kmax+2})."""
    weights = tuple(2 * k + 2 for k in range(1, kmax + 1))
    nv = 2 + len(weights) + extra
    terms = {(0,) * nv: -1}
    for idx, k in enumerate(range(1, kmax + 1)):
        base = [0] * nv
        base[0], base[1] = 2 * k, -(2 * k + 1)
        terms[tuple(base)] = 1
        base[2 + idx] = 1
        terms[tuple(base)] = 1
    return Laurent(terms, nv), weights


def _widen(x: Laurent, nv: int) -> Laurent:
    pad = (0,) * (nv - x.nvars)
    return Laurent._raw({e + pad: c for e, c in x.terms.items()}, nv)


def es_residue(integrand: Laurent) -> tuple[Laurent, tuple[int, ...]]:
    """Res_0[integrand * ES(w) * (w - L/w) dw] as a Laurent polynomial in (L, S_4, ...).

    The Eichler-Shimura factor is truncated at the smallest k that can reach
    w^{-1}, read off from the lowest w-power of the integrand.
    """
    g = integrand * gl2.weyl_kernel()
    if not g:
        return Laurent._raw({}, 1), ()
    low = min(e[0] for e in g.terms)
    kmax = max(0, (-1 - low) // 2)
    es, weights = _es_factor(kmax, 0)
    prod = _widen(g, es.nvars) * es
    return gl2.res0(prod), weights


def closed_form_series(N: int, bound: int = TABLE_BOUND) -> dict[int, dict[IntPartition, MotiveClass]]:
    """Schur expansion of sum_n Serre^{S_n}(M_{1,n}) from the residue formula."""
    _check_bound(N, bound)
    kernel = product_kernel(N)
    # residue of each power-sum coefficient, then convert to Schur
    weights_all: tuple[int, ...] = tuple(2 * k + 2 for k in range(1, N // 2 + 1))
    nv = 1 + len(weights_all)
    terms = {}
    for lam, c in kernel.terms.items():
        r, weights = es_residue(gl2.divide_by_e(c))
        if r:
            terms[lam] = _widen(r, nv) if r.nvars < nv else r
    series = SymSeries(terms, N)
    out = {}
    for n, coeffs in p_to_schur(series).items():
        row = {}
        for lam, c in coeffs.items():
            m = from_laurent(c, weights_all)
            if m:
                row[lam] = m
        out[n] = row
    return out


def nonequi_series(N: int, bound: int = TABLE_BOUND) -> list[MotiveClass]:
    """[Serre(M_{1,n+1}) for n = 0..N-1] via the binomial residue formula."""
    _check_bound(N, bound)
    x = gl2.L() - gl2.H()
    out = []
    for n in range(N):
        r, weights = es_residue(gl2.binom_series(n, x))
        r = r * factorial(n)
        out.append(from_laurent(r, weights))
    return out


# -- the Euler characteristic law ----------------------------------------------------------------------

DON_POINTS = {
    "1": 0, "-1": 6, "i": 3, "-i": 9, "rho": 2, "-rho": 8, "rho^2": 4, "-rho^2": 10,
}
DON_NUM = [1, 0, -1, 0, -2, 0, -1, 0, 1]
DON_DEN = [1, 0, 1, 0, 0, 0, -1, 0, -1]  # (1 + w^2)(1 - w^6)


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, v in enumerate(b):
            a[i + shift] -= f * v
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd(a: Sequence, b: Sequence) -> list:
    a, b = [Fraction(x) for x in a], [Fraction(x) for x in b]
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    return [x / a[-1] for x in a]


def _derivative(p: Sequence) -> list:
    return [i * p[i] for i in range(1, len(p))] or [0]


@dataclass(frozen=True)
class RationalForm:
    """num/den with num, den polynomials in w (coefficient lists), reduced by their gcd."""

    num: tuple
    den: tuple

    def __post_init__(self):
        if not any(self.den):
            raise ZeroDivisionError("zero denominator")
        g = _poly_gcd(self.num, self.den)
        num, rn = _poly_divmod(self.num, g)
        den, rd = _poly_divmod(self.den, g)
        assert not rn and not rd
        # normalize the denominator's constant (or lowest) coefficient to 1
        lead = next(x for x in den if x)
        object.__setattr__(self, "num", tuple(as_rat(x / lead) for x in _trim(num)))
        object.__setattr__(self, "den", tuple(as_rat(x / lead) for x in _trim(den)))

    def series(self, order: int) -> list:
        """Power series coefficients up to w^order (needs den(0) != 0)."""
        den0 = self.den[0]
        out = []
        for m in range(order + 1):
            v = Fraction(self.num[m]) if m < len(self.num) else Fraction(0)
            for j in range(1, min(m, len(self.den) - 1) + 1):
                v -= self.den[j] * out[m - j]
            out.append(as_rat(v / den0))
        return out

    def residue_dw_over_w(self, z: CycloNum) -> CycloNum:
        """Residue of (num/den) dw/w at a simple pole z != 0 of den."""
        d1 = cyclo_eval(list(_derivative(self.den)), z)
        return cyclo_eval(list(self.num), z) / (z * d1)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def don_form() -> RationalForm:
    return RationalForm(tuple(DON_NUM), tuple(DON_DEN))


@dataclass
class DonReport:
    residues: dict[str, Fraction]
    expected_residues: dict[str, Fraction]
    simple_poles: bool
    binomial_vanishing: dict[int, list[str]]
    series_identity: bool
    residue_at_zero: dict[int, Fraction]
    euler: dict[int, tuple[int, int]]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _expected_residue(z: CycloNum) -> Fraction:
    s = z + z ** -1
    val = s * s  # |z + 1/z|^2, since z + 1/z is real
    return {Fraction(4): Fraction(1, 6), Fraction(1): Fraction(-1, 3), Fraction(0): Fraction(-1, 2)}[val.c0]


def verify_don(n_max: int = 12, table_bound: int = TABLE_BOUND) -> DonReport:
    if n_max < 5:
        raise ValueError("the Euler law concerns n >= 5")
    form = don_form()
    failures = []
    residues, expected = {}, {}
    simple = True
    for name, k in DON_POINTS.items():
        z = CycloNum.zeta_power(k)
        if cyclo_eval(list(form.den), z) != CycloNum(0):
            failures.append(f"{name} is not a pole")
        if cyclo_eval(_derivative(form.den), z) == CycloNum(0) or cyclo_eval(list(form.num), z) == CycloNum(0):
            simple = False
            failures.append(f"pole at {name} is not simple")
        r = form.residue_dw_over_w(z)
        if (r.c1, r.c2, r.c3) != (0, 0, 0):
            failures.append(f"residue at {name} is irrational: {r}")
        residues[name] = r.c0
        expected[name] = _expected_residue(z)
        if r.c0 != expected[name]:
            failures.append(f"residue at {name}: {r.c0} != {expected[name]}")

    # the binomial factor binom(1 - w - 1/w, n) at the poles
    vanishing = {}
    for n in range(4, n_max):
        zeros = []
        for name, k in DON_POINTS.items():
            z = CycloNum.zeta_power(k)
            b = binomial(1 - z - z ** -1, n)
            if b == CycloNum(0):
                zeros.append(name)
        vanishing[n] = zeros
        if sorted(zeros) != sorted(nm for nm in DON_POINTS if nm != "1"):
            failures.append(f"binomial vanishing pattern wrong at n={n}: {zeros}")

    # g as a power series equals (w^2 - 1)(sum_k (2 dim S_{2k+2} + 1) w^{2k} - 1)
    order = 2 * n_max + 4
    g_series = form.series(order)
    es = [0] * (order + 1)
    es[0] = -1
    for k in range(1, order // 2 + 1):
        es[2 * k] = 2 * cusp_dim(2 * k + 2) + 1
    direct = _poly_mul([-1, 0, 1], es)[: order + 1]
    series_ok = list(g_series) == direct
    if not series_ok:
        failures.append("power series of g does not match the Eichler-Shimura factor")

    # Res_0 at L = 1 computed directly, against -1/2 * (the residue at w = 1)
    res_zero = {}
    for n in range(0, n_max):
        b = binomial(Laurent({(0,): 1, (1,): -1, (-1,): -1}, 1), n) if n else Laurent.constant(1, 1)
        gl = Laurent({(i,): c for i, c in enumerate(g_series) if c}, 1)
        integrand = b * gl * Laurent.monomial((-1,))
        r0 = integrand.coefficient((-1,))
        res_zero[n] = Fraction(r0)
        if n >= 4:
            at_one = binomial(-1, n) * Fraction(1, 6)
            if Fraction(r0) != -Fraction(1, 2) * at_one:
                failures.append(f"Res_0 at n={n} is not -1/2 of the residue at 1")

    euler = {}
    rows = m1n_table(n_max, max(n_max, table_bound))
    for row in rows:
        if row.n >= 5:
            want = (-1) ** row.n * factorial(row.n - 1) // 12
            euler[row.n] = (row.euler, want)
            if row.euler != want:
                failures.append(f"chi(M_1,{row.n}) = {row.euler}, expected {want}")
    return DonReport(residues, expected, simple, vanishing, series_ok, res_zero, euler, failures)


# -- quotients by S_n ------------------------------------------------------------------------------------


def _ps_mul(a: list, b: list, N: int) -> list:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: N + 1 - i]):
            if y:
                out[i + j] = x * y + out[i + j]
    return out


def _ps_inv(a: list, N: int) -> list:
    """Inverse of a power series with constant term 1."""
    assert a[0] == 1
    out = [0] * (N + 1)
    out[0] = 1
    for m in range(1, N + 1):
        v = 0
        for j in range(1, min(m, len(a) - 1) + 1):
            if a[j]:
                v = v - a[j] * out[m - j]
        out[m] = v
    return out


def _poly(coeffs: dict, N: int) -> list:
    out = [0] * (N + 1)
    for k, v in coeffs.items():
        if k <= N:
            out[k] = v + out[k]
    return out


@dataclass
class QuotientReport:
    N: int
    invariants: list
    serre: list
    euler: list
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def quotient_series(N: int = TABLE_BOUND, bound: int = TABLE_BOUND) -> QuotientReport:
    """Generating series of M_{1,n}/S_n (local systems, Serre classes, Euler numbers) through x^N."""
    _check_bound(N, bound)
    one = gl2.one()
    Lv, wv, e = gl2.L(), gl2.w(), gl2.E_class()
    zero = Laurent._raw({}, 2)

    # (0) specialization p_n -> x^n of the level-N series
    spec = specialize(level_n_series(N, bound), lambda n: 1)
    line0 = [spec.get(n, zero) for n in range(N + 1)]

    # (1) the product formula with p_n -> x^n
    prod = _poly({0: one}, N)
    for n in range(1, N + 1):
        a = zero
        for d in divisors(n):
            if mobius(n // d):
                a = a + e.adams(d) * mobius(n // d)
        a = a * Fraction(1, n)
        factor = _poly({n * j: binomial(a, j) if j else one for j in range(N // n + 1)}, N)
        prod = _ps_mul(prod, factor, N)
    prod[0] = prod[0] - one
    line1 = [gl2.divide_by_e(c) if c else zero for c in prod]

    # (2) the factored rational function
    num = _ps_mul(
        _ps_mul(_poly({0: one, 1: -wv}, N), _poly({0: one, 1: -Lv * wv ** -1}, N), N),
        _ps_mul(_poly({0: one, 2: -one}, N), _poly({0: one, 2: -Lv}, N), N),
        N,
    )
    den = _ps_mul(
        _ps_mul(_poly({0: one, 1: -one}, N), _poly({0: one, 1: -Lv}, N), N),
        _ps_mul(_poly({0: one, 2: -wv}, N), _poly({0: one, 2: -Lv * wv ** -1}, N), N),
        N,
    )
    ratio = _ps_mul(num, _ps_inv(den, N), N)
    ratio[0] = ratio[0] - one
    line2 = [gl2.divide_by_e(c) if c else zero for c in ratio]

    # (3) x (1 - L x^3)/(1 - L x) / (1 - (w + L/w) x^2 + L x^4)
    front = _ps_mul(_poly({1: one, 4: -Lv}, N), _ps_inv(_poly({0: one, 1: -Lv}, N), N), N)
    line3 = _ps_mul(front, _ps_inv(_poly({0: one, 2: -gl2.H(), 4: Lv}, N), N), N)

    # (4) x (1 - L x^3)/(1 - L x) sum_k H_k x^{2k}
    line4 = _ps_mul(front, _poly({2 * k: gl2.H_n(k) for k in range(N // 2 + 1)}, N), N)

    checks = {
        "specialization = product formula": _eq(line0, line1),
        "product formula = factored form": _eq(line1, line2),
        "factored form = x(1-Lx^3)/(1-Lx)/(1-(w+L/w)x^2+Lx^4)": _eq(line2, line3),
        "geometric form = sum_k H_k x^(2k) form": _eq(line3, line4),
    }

    # level one: the s_(n) coefficient of each row
    rows = m1n_table(N, bound)
    serre = [MotiveClass()] + [row.equivariant.get((row.n,), MotiveClass()) for row in rows]
    mfront = [MotiveClass()] * (N + 1)
    for j in range(N):
        mfront[j + 1] = mfront[j + 1] + MotiveClass.L(j)
        if j + 4 <= N:
            mfront[j + 4] = mfront[j + 4] - MotiveClass.L(j + 1)
    h_serre = {4 * k: level1(gl2.HPoly({2 * k: Laurent.constant(1, 1)})) for k in range(N // 4 + 1)}
    serre_closed = _ps_mul(mfront, _poly(h_serre, N), N)
    checks["Serre series = x(1-Lx^3)/(1-Lx) sum_k Serre(M_1,1; H_2k) x^(4k)"] = _eq(serre, serre_closed)

    euler = [euler_specialize(m) if isinstance(m, MotiveClass) else 0 for m in serre]
    h_euler = {4 * k: euler_specialize(h_serre[4 * k]) for k in range(N // 4 + 1)}
    euler_mid = _ps_mul(_poly({1: 1, 2: 1, 3: 1}, N), _poly(h_euler, N), N)
    rational = _ps_mul(
        _ps_mul(_poly({1: 1, 2: 1, 3: 1}, N), _poly({0: 1, 4: -1, 8: -2, 12: -1, 16: 1}, N), N),
        _ps_inv(_ps_mul(_poly({0: 1, 8: -1}, N), _poly({0: 1, 12: -1}, N), N), N),
        N,
    )
    checks["Euler series = (x+x^2+x^3) sum chi(M_1,1; H_2n) x^(4n)"] = euler == euler_mid
    checks["Euler series = rational closed form"] = euler == rational
    return QuotientReport(N, line0, serre, euler, checks)


def _eq(a: list, b: list) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))
