"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A :class:`Laurent` maps exponent tuples (negative entries allowed) to nonzero
ints or Fractions.  It is the workhorse coefficient type: the GL(2) ring uses
two variables (omega, L), the residue integrands add cusp-form symbols, and
univariate instances model power series in x.

Adams operations act by scaling every exponent, which is the lambda-ring
structure in which each variable is a line element.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .numbers import as_rat


class DivisibilityError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class Laurent:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    clean[tuple(e)] = as_rat(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Laurent":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> "Laurent":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> "Laurent":
        exps = tuple(exps)
        return cls({exps: c}, len(exps))

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "Laurent":
        e = [0] * nvars
        e[i] = power
        return cls({tuple(e): 1}, nvars)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent.constant(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = as_rat(v)
            else:
                out.pop(e, None)
        return Laurent._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = as_rat(v)
            else:
                out.pop(e, None)
        return Laurent._raw(out, self.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Laurent._raw({}, self.nvars)
            return Laurent._raw({e: as_rat(c * other) for e, c in self.terms.items()}, self.nvars)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        if self.nvars == 2:
            for (a0, a1), c in self.terms.items():
                for (b0, b1), d in o.terms.items():
                    k = (a0 + b0, a1 + b1)
                    out[k] = get(k, 0) + c * d
        else:
            for e, c in self.terms.items():
                for f, d in o.terms.items():
                    k = tuple(x + y for x, y in zip(e, f))
                    out[k] = get(k, 0) + c * d
        return Laurent._raw({k: as_rat(v) for k, v in out.items() if v}, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return exact_divide(self, other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            ((e, c),) = self.terms.items()
            return Laurent({tuple(k * x for x in e): Fraction(1) / Fraction(c) ** (-k)}, self.nvars)
        result = Laurent.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent.constant(other, self.nvars)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Laurent({self.terms!r}, nvars={self.nvars})"

    # -- lambda-ring and structural operations --------------------------------

    def adams(self, d: int) -> "Laurent":
        """psi_d: every variable is a line element, so exponents scale by d."""
        if d == 1:
            return self
        return Laurent._raw({tuple(d * x for x in e): c for e, c in self.terms.items()}, self.nvars)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    def coefficient(self, exps: tuple) -> object:
        return self.terms.get(tuple(exps), 0)

    def substitute_monomial(self, images: list["Laurent"]) -> "Laurent":
        """Ring map sending variable i to images[i] (a unit when exponents are negative)."""
        nv = images[0].nvars if images else 0
        result = Laurent._raw({}, nv)
        powers: dict = {}
        for e, c in self.terms.items():
            term = Laurent.constant(c, nv)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            result = result + term
        return result

    def degree_range(self, i: int) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        vals = [e[i] for e in self.terms]
        return (min(vals), max(vals))

    def coefficient_in(self, i: int, k: int) -> "Laurent":
        """Coefficient of x_i^k, as a Laurent polynomial in the remaining variables."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + e[i + 1:]] = c
        return Laurent._raw(out, self.nvars - 1)

    def group_by_var(self, i: int) -> dict:
        """Group by the exponent of variable i: {k: coefficient_in(i, k)}."""
        groups: dict = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: Laurent._raw(v, self.nvars - 1) for k, v in groups.items()}

    def evaluate(self, values: list) -> object:
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    if isinstance(v, int):
                        v = Fraction(v)
                    term = term * v**k
            total = total + term
        return total


def exact_divide(num: Laurent, den: Laurent) -> Laurent:
    """Exact quotient num/den of Laurent polynomials.

    Uses long division with respect to the lexicographic order on exponent
    tuples.  A single divisor is its own Groebner basis, so the remainder is
    zero exactly when den divides num.  In an exact quotient every exponent
    lies in the box [min(num) - min(den), max(num) - max(den)] per variable; a
    quotient term outside that box proves non-divisibility and stops the loop.
    """
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.nvars != den.nvars:
        raise ValueError("variable count mismatch")
    if not num:
        return Laurent._raw({}, num.nvars)
    lead_d = max(den.terms)
    lc = Fraction(den.terms[lead_d])
    n = num.nvars
    lo = [min(e[i] for e in num.terms) - min(e[i] for e in den.terms) for i in range(n)]
    hi = [max(e[i] for e in num.terms) - max(e[i] for e in den.terms) for i in range(n)]
    rem = dict(num.terms)
    quot: dict = {}
    dterms = list(den.terms.items())
    while rem:
        lead_r = max(rem)
        qe = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(not lo[i] <= qe[i] <= hi[i] for i in range(n)):
            raise DivisibilityError(
                "nonzero remainder in exact division", Laurent(rem, num.nvars)
            )
        qc = as_rat(rem[lead_r] / lc)
        quot[qe] = qc
        for e, c in dterms:
            k = tuple(a + b for a, b in zip(qe, e))
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Laurent(quot, num.nvars)
