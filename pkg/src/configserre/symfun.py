"""Symmetric functions with coefficients in a lambda-ring.

Elements of the completed tensor product of the symmetric functions with a
coefficient ring R are stored in the power-sum basis as
:class:`SymSeries`: a dict partition -> coefficient, truncated at a degree N.
Adams operations are diagonal there, so Exp/Log and Schur operations are all
computed in that basis; Schur coefficients are produced on demand by the
Murnaghan-Nakayama rule.

Coefficient ring protocol: elements support ``+``, ``-``, ``*`` among
themselves and with int/Fraction, truthiness for zero tests, and an
``adams(d)`` method.  Plain ints and Fractions are accepted as the trivial
lambda-ring (every Adams operation is the identity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .numbers import as_rat, factorial, mobius
from .partitions import IntPartition, partitions_of, sort_partition, z_lambda


class IntegralityError(ArithmeticError):
    """A computation that must land in the integral ring produced a denominator."""


class TruncationError(ValueError):
    pass


def adams_of(x, d: int):
    if d == 1:
        return x
    op = getattr(x, "adams", None)
    return op(d) if op is not None else x


def is_integral(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return x.is_integral()


def _clean(x):
    if isinstance(x, Fraction):
        return as_rat(x)
    return x


# -- characters of the symmetric group ----------------------------------------


def _beta_set(lam: IntPartition, length: int) -> tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: tuple[int, ...]) -> IntPartition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(p for p in (beta[i] - (length - 1 - i) for i in range(length)) if p > 0)


@lru_cache(maxsize=None)
def sn_character(lam: IntPartition, mu: IntPartition) -> int:
    """chi^lam evaluated on cycle type mu (Murnaghan-Nakayama rule)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam, len(lam))
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in occupied:
            # removing a rim hook of length r = moving bead b to b - r
            height = sum(1 for c in beta if b - r < c < b)
            new_beta = tuple(c if c != b else b - r for c in beta)
            total += (-1) ** height * sn_character(_from_beta(new_beta), rest)
    return total


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[IntPartition, IntPartition], int]:
    return {(lam, mu): sn_character(lam, mu) for lam in partitions_of(n) for mu in partitions_of(n)}


def irrep_dim(lam: IntPartition) -> int:
    return sn_character(tuple(lam), (1,) * sum(lam))


@dataclass(frozen=True)
class Character:
    """A class function on S_n: cycle type -> value."""

    n: int
    values: Mapping[IntPartition, object] = field(hash=False)

    def __call__(self, mu: IntPartition):
        return self.values.get(tuple(mu), 0)

    def inner(self, other: "Character") -> Fraction:
        total = Fraction(0)
        for mu in partitions_of(self.n):
            total += Fraction(self(mu) * other(mu), z_lambda(mu))
        return total


# -- the series type --------------------------------------------------------------


def _add_into(out: dict, key, value):
    cur = out.get(key)
    new = value if cur is None else cur + value
    if new:
        out[key] = new
    elif cur is not None:
        del out[key]


class SymSeries:
    """sum_lambda c_lambda p_lambda truncated at degree N."""

    __slots__ = ("N", "terms", "lossy")

    def __init__(self, terms: Mapping[IntPartition, object] | None = None, N: int = 0, lossy: bool = False):
        self.N = N
        self.lossy = lossy
        clean = {}
        for lam, c in (terms or {}).items():
            lam = sort_partition(lam)
            if sum(lam) > N:
                raise TruncationError(f"term p{lam} exceeds truncation degree {N}")
            if c:
                _add_into(clean, lam, _clean(c))
        self.terms = clean

    @classmethod
    def _raw(cls, terms, N, lossy=False):
        obj = cls.__new__(cls)
        obj.N, obj.terms, obj.lossy = N, terms, lossy
        return obj

    @classmethod
    def constant(cls, c, N: int) -> "SymSeries":
        return cls({(): c}, N)

    @classmethod
    def power_sum(cls, k: int, N: int, coeff=1) -> "SymSeries":
        return cls({(k,): coeff} if k <= N else {}, N)

    # -- ring structure --

    def _check(self, other: "SymSeries"):
        if self.N != other.N:
            raise TruncationError(f"truncation mismatch: {self.N} vs {other.N}")

    def __add__(self, other):
        if not isinstance(other, SymSeries):
            other = SymSeries.constant(other, self.N)
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            _add_into(out, lam, c)
        return SymSeries._raw(out, self.N, self.lossy or other.lossy)

    __radd__ = __add__

    def __neg__(self):
        return SymSeries._raw({lam: -c for lam, c in self.terms.items()}, self.N, self.lossy)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymSeries):
            return self.scale(other)
        self._check(other)
        N = self.N
        out: dict = {}
        b_items = [(lam, sum(lam), c) for lam, c in other.terms.items()]
        for lam, c in self.terms.items():
            d = sum(lam)
            for mu, e, c2 in b_items:
                if d + e <= N:
                    _add_into(out, sort_partition(lam + mu), c * c2)
        return SymSeries._raw(out, N, self.lossy or other.lossy)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SymSeries":
        out = {}
        for lam, v in self.terms.items():
            w = _clean(v * c)
            if w:
                out[lam] = w
        return SymSeries._raw(out, self.N, self.lossy)

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __repr__(self):
        return f"SymSeries({self.terms!r}, N={self.N})"

    def __bool__(self):
        return bool(self.terms)

    # -- structure --

    def degree_part(self, n: int) -> "SymSeries":
        return SymSeries._raw({lam: c for lam, c in self.terms.items() if sum(lam) == n}, self.N, self.lossy)

    def by_degree(self) -> dict[int, dict]:
        out: dict = {}
        for lam, c in self.terms.items():
            out.setdefault(sum(lam), {})[lam] = c
        return out

    def constant_term(self):
        return self.terms.get((), 0)

    def coefficient(self, lam: IntPartition):
        return self.terms.get(tuple(lam), 0)

    def min_degree(self) -> int:
        return min((sum(lam) for lam in self.terms), default=self.N + 1)

    def map_coefficients(self, fn: Callable) -> "SymSeries":
        out = {}
        for lam, c in self.terms.items():
            w = fn(c)
            if w:
                out[lam] = w
        return SymSeries._raw(out, self.N, self.lossy)

    def truncate(self, N: int) -> "SymSeries":
        return SymSeries._raw({lam: c for lam, c in self.terms.items() if sum(lam) <= N}, N, self.lossy)

    def adams(self, d: int) -> "SymSeries":
        """psi_d: p_k -> p_{dk} with psi_d applied to coefficients."""
        out = {}
        lossy = self.lossy
        for lam, c in self.terms.items():
            if d * sum(lam) > self.N:
                lossy = True
                continue
            _add_into(out, tuple(d * x for x in lam), adams_of(c, d))
        return SymSeries._raw(out, self.N, lossy)

    def is_integral_schur(self) -> bool:
        return all(is_integral(c) for deg in p_to_schur(self).values() for c in deg.values())


# -- exp / log ---------------------------------------------------------------------


def _mul_slices(a: dict, b: dict, out: dict, weight=1):
    for lam, c in a.items():
        for mu, d in b.items():
            _add_into(out, sort_partition(lam + mu), c * d * weight)


def exp_op(x: SymSeries) -> SymSeries:
    """Ordinary exponential of a series with zero constant term."""
    if x.constant_term():
        raise ValueError("exp_op needs a series with zero constant term")
    N = x.N
    A = x.by_degree()
    E: dict[int, dict] = {0: {(): 1}}
    for n in range(1, N + 1):
        acc: dict = {}
        for j in range(1, n + 1):
            if j in A and E.get(n - j):
                _mul_slices(A[j], E[n - j], acc, j)
        E[n] = {lam: _clean(c * Fraction(1, n)) for lam, c in acc.items()}
    out = {lam: c for part in E.values() for lam, c in part.items() if c}
    return SymSeries._raw(out, N, x.lossy)


def log_op(x: SymSeries) -> SymSeries:
    """Ordinary logarithm of a series with constant term 1."""
    if x.constant_term() != 1:
        raise ValueError("log_op needs a series with constant term 1")
    N = x.N
    B = x.by_degree()
    Lg: dict[int, dict] = {}
    for n in range(1, N + 1):
        acc: dict = {}
        for lam, c in B.get(n, {}).items():
            _add_into(acc, lam, c * n)
        for j in range(1, n):
            if Lg.get(j) and B.get(n - j):
                _mul_slices(Lg[j], B[n - j], acc, -j)
        Lg[n] = {lam: _clean(c * Fraction(1, n)) for lam, c in acc.items()}
    out = {lam: c for part in Lg.values() for lam, c in part.items() if c}
    return SymSeries._raw(out, N, x.lossy)


def Exp(x: SymSeries, check_integral: bool = False) -> SymSeries:
    """Plethystic exponential exp(sum_n psi_n(x)/n) on the augmentation ideal."""
    if x.constant_term():
        raise ValueError("Exp is defined on series without a degree-0 term")
    total = SymSeries._raw({}, x.N)
    for m in range(1, x.N + 1):
        total = total + x.adams(m).scale(Fraction(1, m))
    total.lossy = x.lossy
    result = exp_op(total)
    if check_integral and not result.is_integral_schur():
        raise IntegralityError("Exp produced non-integral Schur coefficients")
    return result


def Log(x: SymSeries) -> SymSeries:
    """Inverse of Exp: sum_n mu(n)/n log(psi_n(x))."""
    if x.constant_term() != 1:
        raise ValueError("Log is defined on series with constant term 1")
    base = log_op(x)
    total = SymSeries._raw({}, x.N)
    for n in range(1, x.N + 1):
        mu = mobius(n)
        if mu:
            total = total + base.adams(n).scale(Fraction(mu, n))
    total.lossy = x.lossy
    return total


def log_one_plus_p(n: int, N: int, coeff=1) -> SymSeries:
    """log(1 + p_n) truncated at degree N, times coeff."""
    terms = {}
    for l in range(1, N // n + 1):
        terms[(n,) * l] = _clean(coeff * Fraction((-1) ** (l - 1), l))
    return SymSeries(terms, N)


# -- bases ---------------------------------------------------------------------------


def p_to_schur(a: SymSeries) -> dict[int, dict[IntPartition, object]]:
    """Schur coefficients per degree: p_mu = sum_lam chi^lam(mu) s_lam."""
    out: dict = {}
    for n, part in sorted(a.by_degree().items()):
        table = character_table(n)
        # n! c_mu is integral whenever the Schur coefficients are, so the
        # inner sums run over ints and only the final scaling touches Fractions
        scale = factorial(n)
        scaled = {mu: c * scale for mu, c in part.items()}
        inv = Fraction(1, scale)
        coeffs = {}
        for lam in partitions_of(n):
            acc = 0
            for mu, c in scaled.items():
                chi = table[(lam, mu)]
                if chi:
                    acc = c * chi + acc
            if acc:
                acc = _clean(acc * inv)
                if acc:
                    coeffs[lam] = acc
        out[n] = coeffs
    return out


def schur_to_p(coeffs: Mapping[IntPartition, object], N: int) -> SymSeries:
    """Inverse conversion: s_lam = sum_mu chi^lam(mu)/z_mu p_mu."""
    out: dict = {}
    for lam, c in coeffs.items():
        n = sum(lam)
        for mu in partitions_of(n):
            chi = sn_character(tuple(lam), mu)
            if chi:
                _add_into(out, mu, c * Fraction(chi, z_lambda(mu)))
    return SymSeries({k: _clean(v) for k, v in out.items()}, N)


def schur(lam: IntPartition, N: int) -> SymSeries:
    return schur_to_p({tuple(lam): 1}, N)


def h(n: int, N: int) -> SymSeries:
    return schur((n,), N) if n else SymSeries.constant(1, N)


def e(n: int, N: int) -> SymSeries:
    return schur((1,) * n, N) if n else SymSeries.constant(1, N)


def frobenius_ch(chi: Character, N: int | None = None) -> SymSeries:
    """ch(V) = (1/n!) sum_sigma chi(sigma) p_sigma = sum_mu chi(mu)/z_mu p_mu."""
    N = chi.n if N is None else N
    return SymSeries({mu: chi(mu) * Fraction(1, z_lambda(mu)) for mu in partitions_of(chi.n)}, N)


def character_from_ch(a: SymSeries, n: int) -> Character:
    return Character(n, {mu: _clean(a.coefficient(mu) * z_lambda(mu)) for mu in partitions_of(n)})


def schur_op(mu: IntPartition, x, check_integral: bool = True):
    """sigma_mu(x) = sum_rho chi^mu(rho)/z_rho prod_i psi_{rho_i}(x)."""
    mu = tuple(mu)
    n = sum(mu)
    total = 0
    for rho in partitions_of(n):
        chi = sn_character(mu, rho)
        if not chi:
            continue
        term = Fraction(chi, z_lambda(rho))
        for r in rho:
            term = adams_of(x, r) * term
        total = term + total
    total = _clean(total)
    if check_integral and not is_integral(total):
        raise IntegralityError(f"sigma_{mu} of {x!r} is not integral")
    return total


def sigma(n: int, x, check_integral: bool = True):
    return schur_op((n,), x, check_integral) if n else 1


def specialize(a: SymSeries, rule: Callable[[int], object]) -> dict[int, object]:
    """Apply the ring map p_n -> rule(n) * t^n; returns {degree: coefficient of t^degree}."""
    cache: dict = {}
    out: dict = {}
    for lam, c in a.terms.items():
        val = c
        for part in lam:
            if part not in cache:
                cache[part] = rule(part)
            val = val * cache[part]
            if not val:
                break
        if val:
            d = sum(lam)
            cur = out.get(d, 0)
            out[d] = _clean(val + cur)
    return {d: v for d, v in sorted(out.items()) if v}


# -- the free lambda-ring on E(1), E(2), ... -------------------------------------------------


def _merge_key(a: tuple, b: tuple) -> tuple:
    merged = dict(a)
    for k, lam in b:
        merged[k] = sort_partition(merged.get(k, ()) + lam)
    return tuple(sorted(merged.items()))


class FreeLambdaClass:
    """Element of the free lambda-ring on generators E(1), E(2), ... over Q.

    Each generator E(k) is the first power sum of its own alphabet; a key is a
    sorted tuple of (k, partition) pairs meaning prod_k p^{(k)}_partition.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        out: dict = {}
        for key, c in (terms or {}).items():
            key = tuple(sorted((k, sort_partition(lam)) for k, lam in key if lam))
            if c:
                _add_into(out, key, _clean(Fraction(c)))
        self.terms = out

    @classmethod
    def E(cls, k: int) -> "FreeLambdaClass":
        return cls({((k, (1,)),): 1})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def _coerce(self, other):
        if isinstance(other, FreeLambdaClass):
            return other
        if isinstance(other, (int, Fraction)):
            return FreeLambdaClass({(): other}) if other else FreeLambdaClass()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(out, k, c)
        return FreeLambdaClass._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeLambdaClass._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return FreeLambdaClass()
            return FreeLambdaClass._raw({k: _clean(c * other) for k, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                _add_into(out, _merge_key(k1, k2), c1 * c2)
        return FreeLambdaClass._raw({k: _clean(v) for k, v in out.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"FreeLambdaClass({self.terms!r})"

    def adams(self, d: int) -> "FreeLambdaClass":
        if d == 1:
            return self
        return FreeLambdaClass._raw(
            {tuple((k, tuple(d * x for x in lam)) for k, lam in key): c for key, c in self.terms.items()}
        )

    def weight(self) -> set[int]:
        return {sum(k * sum(lam) for k, lam in key) for key in self.terms}

    def to_sigma_basis(self) -> dict[tuple, object]:
        """Coefficients in the basis prod_k sigma_{mu_k}(E(k)) (Schur functions per alphabet)."""
        out: dict = {}
        for key, c in self.terms.items():
            factors = []
            for k, nu in key:
                n = sum(nu)
                factors.append([(k, lam, sn_character(lam, nu)) for lam in partitions_of(n) if sn_character(lam, nu)])
            for combo in itertools.product(*factors):
                coeff = c
                newkey = []
                for k, lam, chi in combo:
                    coeff = coeff * chi
                    newkey.append((k, lam))
                _add_into(out, tuple(newkey), coeff)
        return {k: _clean(v) for k, v in sorted(out.items()) if v}

    @classmethod
    def from_sigma_basis(cls, coeffs: Mapping[tuple, object]) -> "FreeLambdaClass":
        total = cls()
        for key, c in coeffs.items():
            term = cls({(): c})
            for k, lam in key:
                term = term * schur_op(lam, cls.E(k), check_integral=False)
            total = total + term
        return total

    def is_integral(self) -> bool:
        return all(is_integral(c) for c in self.to_sigma_basis().values())


def render_sigma_monomial(key: tuple) -> str:
    if not key:
        return "1"
    parts = []
    for k, lam in key:
        if lam == (1,):
            parts.append(f"E{k}")
        else:
            parts.append(f"sigma_{partition_label(lam)}(E{k})")
    return " ".join(parts)


def partition_label(lam: IntPartition) -> str:
    """Compact label with exponents for repeated parts, e.g. (2,1,1) -> '21^2'."""
    out = []
    for part, group in itertools.groupby(lam):
        m = len(list(group))
        out.append(f"{part}^{m}" if m > 1 else f"{part}")
    return "".join(out) if all(p < 10 for p in lam) else ",".join(out)
