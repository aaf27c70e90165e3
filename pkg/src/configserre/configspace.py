"""Equivariant Serre characteristics of configuration spaces.

Given the classes E(n) = Serre_S(X, E^{(x) n}) in a lambda-ring R, the
generating series sum_n Serre^{S_n}(F(X/S, n), E^{[x] n}) lies in the completed
tensor product of symmetric functions with R.  It is computed two ways, as
the plethystic exponential of Mobius-weighted logarithms and as an ordinary
exponential of Adams operations, and the two are asserted equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .laurent import DivisibilityError, Laurent
from .numbers import as_rat, divisors, mobius
from .partitions import IntPartition, partitions_of
from .symfun import (
    FreeLambdaClass,
    IntegralityError,
    SymSeries,
    Exp,
    Log,
    adams_of,
    exp_op,
    is_integral,
    log_one_plus_p,
    p_to_schur,
    partition_label,
    render_sigma_monomial,
    schur_op,
)

DEFAULT_PHI_BOUND = 6


@dataclass(frozen=True)
class SerreInput:
    """The values E(1), ..., E(N) in a coefficient lambda-ring."""

    values: Mapping[int, object] = field(hash=False)
    ring: str = "custom"

    def __post_init__(self):
        if not self.values or min(self.values) != 1:
            raise ValueError("SerreInput needs E(1) at least")

    @property
    def N(self) -> int:
        n = 0
        while n + 1 in self.values:
            n += 1
        return n

    def E(self, n: int):
        if n not in self.values:
            raise KeyError(f"E({n}) was not supplied")
        return self.values[n]

    @classmethod
    def unit(cls, e, N: int) -> "SerreInput":
        """The unit-coefficient case: E(n) = e for every n."""
        return cls({n: e for n in range(1, N + 1)}, "unit")

    @classmethod
    def free(cls, N: int) -> "SerreInput":
        return cls({n: FreeLambdaClass.E(n) for n in range(1, N + 1)}, "free")


def _push_argument(inp: SerreInput, N: int) -> SymSeries:
    # sum_n mu(n)/n sum_l (-1)^{l-1}/l p_n^l E(nl)
    total = SymSeries._raw({}, N)
    for n in range(1, N + 1):
        mu = mobius(n)
        if not mu:
            continue
        terms = {}
        for l in range(1, N // n + 1):
            terms[(n,) * l] = inp.E(n * l) * Fraction(mu * (-1) ** (l - 1), n * l)
        total = total + SymSeries(terms, N)
    return total


def _adams_argument(inp: SerreInput, N: int) -> SymSeries:
    # sum_n 1/n sum_l (-1)^{l-1}/l p_n^l sum_{d|n} mu(n/d) psi_d(E(ln/d))
    terms = {}
    for n in range(1, N + 1):
        for l in range(1, N // n + 1):
            inner = 0
            for d in divisors(n):
                mu = mobius(n // d)
                if mu:
                    inner = adams_of(inp.E(l * n // d), d) * mu + inner
            if inner:
                terms[(n,) * l] = inner * Fraction((-1) ** (l - 1), n * l)
    return SymSeries(terms, N)


def config_serre(inp: SerreInput, N: int, check: bool = True) -> SymSeries:
    """sum_{n=0}^N Serre^{S_n}(F(X/S,n)) in the power-sum basis."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if inp.N < N:
        raise KeyError(f"E(n) is only supplied up to n = {inp.N}, need {N}")
    series = Exp(_push_argument(inp, N))
    if check:
        other = exp_op(_adams_argument(inp, N))
        if other != series:
            raise AssertionError("Exp/Log and Adams forms of the configuration series disagree")
        for deg, coeffs in p_to_schur(series).items():
            for lam, c in coeffs.items():
                if not is_integral(c):
                    raise IntegralityError(f"non-integral Schur coefficient at {lam}")
    return series


def lehrer_solomon_series(inp: SerreInput, N: int, lie_ch: Callable[[int], SymSeries]) -> SymSeries:
    """Exp(sum_n ch(l(n)) E(n)) for a supplied Frobenius characteristic of l(n)."""
    total = SymSeries._raw({}, N)
    for n in range(1, N + 1):
        total = total + lie_ch(n).map_coefficients(lambda c, e=inp.E(n): e * c)
    return Exp(total)


def lie_ch(n: int, N: int | None = None) -> SymSeries:
    """(1/n) sum_{d|n} (-1)^{n/d-1} mu(d) p_d^{n/d}."""
    N = n if N is None else N
    terms = {}
    for d in divisors(n):
        if mobius(d):
            terms[(d,) * (n // d)] = Fraction((-1) ** (n // d - 1) * mobius(d), n)
    return SymSeries(terms, N)


# -- the universal polynomials Phi_lambda -------------------------------------------------------


def phi_polynomials(max_n: int, bound: int = DEFAULT_PHI_BOUND) -> dict[IntPartition, FreeLambdaClass]:
    """Schur coefficients of the configuration series over the free lambda-ring on E(1), E(2), ..."""
    if max_n > bound:
        raise ValueError(f"max_n = {max_n} exceeds the configured bound {bound}")
    series = config_serre(SerreInput.free(max_n), max_n)
    out = {}
    for deg, coeffs in p_to_schur(series).items():
        if deg == 0:
            continue
        for lam in partitions_of(deg):
            out[lam] = coeffs.get(lam, FreeLambdaClass())
    return out


def render_phi(x: FreeLambdaClass) -> str:
    """Print in the basis of products sigma_mu(E(k)), largest sigma first."""
    coeffs = x.to_sigma_basis()
    if not coeffs:
        return "0"

    def order(key):
        # sigma of E(1) first, then by total weight of E(1)
        w1 = sum(sum(lam) for k, lam in key[0] if k == 1)
        return (-w1, [(k, tuple(-p for p in lam)) for k, lam in key[0]])

    parts = []
    for key, c in sorted(coeffs.items(), key=order):
        mono = render_sigma_monomial(key)
        mag = abs(c)
        body = mono if mag == 1 else f"{mag} {mono}"
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def phi_from_sigma(spec: Mapping[tuple, int]) -> FreeLambdaClass:
    """Build a class from {((k, mu), ...): coeff} meaning prod sigma_mu(E(k))."""
    return FreeLambdaClass.from_sigma_basis(spec)


def specialize_free(x: FreeLambdaClass, e1) -> object:
    """Set E(k) = e1 for every k (e1 in any lambda-ring)."""
    total = 0
    for key, c in x.terms.items():
        term = c
        for k, lam in key:
            for part in lam:
                term = adams_of(e1, part) * term
        total = term + total
    return as_rat(total) if isinstance(total, Fraction) else total


# -- torsors ---------------------------------------------------------------------------------------


def _divider_for(e) -> Callable:
    if isinstance(e, Laurent):
        from .gl2 import exact_divide

        return lambda c: exact_divide(c if isinstance(c, Laurent) else Laurent.constant(c, e.nvars), e)
    if isinstance(e, (int, Fraction)):

        def div(c):
            q = Fraction(c) / e
            return as_rat(q)

        return div
    raise TypeError(f"no exact division available for {type(e).__name__}")


def torsor_serre(e, N: int, divide: Callable | None = None) -> SymSeries:
    """(Exp(Log(1 + p_1) e) - 1) / e, truncated at degree N.

    ``divide`` performs exact division by e of a single coefficient and must
    raise on a nonzero remainder; it defaults to the GL(2) or rational
    division matching the type of e.
    """
    divide = divide or _divider_for(e)
    one_plus_p1 = SymSeries({(): 1, (1,): 1}, N)
    numerator = Exp(Log(one_plus_p1).scale(e)) - 1
    out = {}
    for lam, c in numerator.terms.items():
        q = divide(c)
        if q:
            out[lam] = q
    return SymSeries(out, N)


def torsor_numerator(e, N: int) -> SymSeries:
    one_plus_p1 = SymSeries({(): 1, (1,): 1}, N)
    return Exp(Log(one_plus_p1).scale(e)) - 1


__all__ = [
    "DivisibilityError",
    "SerreInput",
    "config_serre",
    "lehrer_solomon_series",
    "lie_ch",
    "phi_polynomials",
    "phi_from_sigma",
    "render_phi",
    "specialize_free",
    "torsor_serre",
    "torsor_numerator",
]
