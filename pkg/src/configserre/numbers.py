"""Exact number-theoretic helpers and the cyclotomic field Q(zeta_12).

Integers are Python ints and rationals are :class:`fractions.Fraction`, so no
rounding ever happens anywhere in the package.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]

_DEFAULT_BOUND = 64
_lock = threading.Lock()
_mobius: list[int] = [0, 1]
_factorial: list[int] = [1]


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


def _mobius_direct(n: int) -> int:
    result = 1
    while n > 1:
        p = _smallest_prime_factor(n)
        n //= p
        if n % p == 0:
            return 0
        result = -result
    return result


def _extend(bound: int) -> None:
    with _lock:
        while len(_mobius) <= bound:
            _mobius.append(_mobius_direct(len(_mobius)))
        while len(_factorial) <= bound:
            _factorial.append(_factorial[-1] * len(_factorial))


_extend(_DEFAULT_BOUND)


def mobius(n: int) -> int:
    """Möbius function mu(n) for n >= 1."""
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    if n >= len(_mobius):
        _extend(max(n, 2 * len(_mobius)))
    return _mobius[n]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n >= len(_factorial):
        _extend(max(n, 2 * len(_factorial)))
    return _factorial[n]


def divisors(n: int) -> list[int]:
    """Sorted list of the positive divisors of n."""
    if n < 1:
        raise ValueError(f"divisors is defined for n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def binomial(x, k: int):
    """Generalized binomial coefficient x(x-1)...(x-k+1)/k! for any ring element x.

    Works for ints, Fractions and any object supporting ``-`` and ``*`` with ints
    and division by an int via multiplication with a Fraction.
    """
    if k < 0:
        return 0
    result = 1
    for i in range(k):
        result = result * (x - i)
    if isinstance(result, int):
        # exact for integer x
        return Fraction(result, factorial(k)) if result % factorial(k) else result // factorial(k)
    return result * Fraction(1, factorial(k))


def as_rat(x: Rat) -> Rat:
    """Collapse a Fraction with unit denominator back to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# ---------------------------------------------------------------------------
# Q(zeta_12) = Q[t]/(t^4 - t^2 + 1)


@dataclass(frozen=True)
class CycloNum:
    """c0 + c1 t + c2 t^2 + c3 t^3 with t a primitive 12th root of unity."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    c3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_list(cls, coeffs: Iterable[Rat]) -> "CycloNum":
        """Reduce an arbitrary coefficient list in t modulo t^4 = t^2 - 1."""
        c = [Fraction(v) for v in coeffs]
        for k in range(len(c) - 1, 3, -1):
            v = c[k]
            if v:
                c[k] = Fraction(0)
                c[k - 2] += v
                c[k - 4] -= v
        c += [Fraction(0)] * (4 - len(c))
        return cls(*c[:4])

    @classmethod
    def zeta_power(cls, k: int) -> "CycloNum":
        k %= 12
        return cls.from_list([0] * k + [1])

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        other = _cyclo(other)
        if other is NotImplemented:
            return other
        return CycloNum(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(*(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _cyclo(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _cyclo(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum.from_list(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return cyclo_invert(self) ** (-k)
        result, base = CycloNum(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return self * cyclo_invert(_cyclo(other))

    def __rtruediv__(self, other):
        return _cyclo(other) * cyclo_invert(self)

    def __eq__(self, other):
        other = _cyclo(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "CycloNum(%s)" % ", ".join(str(c) for c in self.coeffs)


def _cyclo(x):
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum(Fraction(x))
    return NotImplemented


ZETA = CycloNum.zeta_power(1)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, v in enumerate(b):
            a[i + shift] -= factor * v
        a.pop()
    return q, a


def cyclo_invert(z: CycloNum) -> CycloNum:
    """Multiplicative inverse via the extended Euclidean algorithm in Q[t]."""
    if not z:
        raise ZeroDivisionError("CycloNum zero has no inverse")
    modulus = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]
    r0, r1 = modulus, list(z.coeffs)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _poly_divmod(r0, r1)
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, a in enumerate(q):
            for j, b in enumerate(s1):
                prod[i + j] += a * b
        s_new = [Fraction(0)] * max(len(s0), len(prod))
        for i, v in enumerate(s0):
            s_new[i] += v
        for i, v in enumerate(prod):
            s_new[i] -= v
        r0, r1 = r1, r
        s0, s1 = s1, s_new
    # r0 is a nonzero constant since t^4 - t^2 + 1 is irreducible
    while r0 and r0[-1] == 0:
        r0.pop()
    assert len(r0) == 1, "modulus is irreducible, gcd must be constant"
    inv = CycloNum.from_list([v / r0[0] for v in s0])
    assert z * inv == CycloNum(1)
    return inv


def cyclo_eval(p, z: CycloNum) -> CycloNum:
    """Evaluate a one-variable Laurent polynomial at z.

    ``p`` may be a mapping exponent -> rational, a sequence of coefficients
    (index = exponent), or a one-variable :class:`~configserre.laurent.Laurent`.
    """
    if hasattr(p, "terms") and hasattr(p, "nvars"):
        items = [(e[0], c) for e, c in p.terms.items()]
    elif isinstance(p, Mapping):
        items = list(p.items())
    else:
        items = list(enumerate(p))
    result = CycloNum()
    inv = None
    for e, c in items:
        if not c:
            continue
        if e >= 0:
            result = result + z**e * Fraction(c)
        else:
            if inv is None:
                inv = cyclo_invert(z)
            result = result + inv ** (-e) * Fraction(c)
    return result
