"""The representation ring of GL(2) as Weyl-symmetric Laurent polynomials.

A class is a two-variable :class:`Laurent` in (w, L), variable 0 being the
root variable w and variable 1 the Lefschetz class L.  The standard
representation is H = w + L/w, the determinant is L, and Sym^n of the
standard representation is

    H_n = sum_{j=0}^{n} w^{n-2j} L^j,

the Weyl character with its determinant twists.  Ring elements are exactly the
Laurent polynomials invariant under w -> L/w; arbitrary Laurent polynomials in
(w, L) are allowed as residue workspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .laurent import DivisibilityError, Laurent, exact_divide as _generic_divide
from .numbers import as_rat, binomial

W, LVAR = 0, 1


class SymmetryError(ValueError):
    """An element outside the Weyl-invariant subring was passed where a GL(2) class is required."""


def w(power: int = 1) -> Laurent:
    return Laurent.var(W, 2, power)


def L(power: int = 1) -> Laurent:
    return Laurent.var(LVAR, 2, power)


def one() -> Laurent:
    return Laurent.constant(1, 2)


def H() -> Laurent:
    return w() + L() * w(-1)


def H_n(n: int) -> Laurent:
    if n < 0:
        raise ValueError("H_n needs n >= 0")
    return Laurent({(n - 2 * j, j): 1 for j in range(n + 1)}, 2)


def E_class() -> Laurent:
    """1 - H + L = (1 - w)(1 - L/w)."""
    return one() - H() + L()


def is_weyl_symmetric(x: Laurent) -> bool:
    """Coefficient of w^e L^a equals that of w^{-e} L^{a+e}."""
    return all(x.terms.get((-e, a + e), 0) == c for (e, a), c in x.terms.items())


def weyl_reflect(x: Laurent) -> Laurent:
    return Laurent({(-e, a + e): c for (e, a), c in x.terms.items()}, 2)


def adams_gl2(d: int, x: Laurent) -> Laurent:
    """psi_d: w -> w^d, L -> L^d."""
    if d < 1:
        raise ValueError("Adams operations are indexed by d >= 1")
    return x.adams(d)


# -- the H_n basis -----------------------------------------------------------------------


def _lpoly(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    return Laurent.constant(x, 1)


@dataclass(frozen=True)
class HPoly:
    """sum_n c_n(L) H_n with c_n a one-variable Laurent polynomial in L."""

    coeffs: Mapping[int, Laurent] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        clean = {n: _lpoly(c) for n, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "HPoly") -> "HPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return HPoly(out)

    def __neg__(self):
        return HPoly({n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs.values())

    def __str__(self):
        return render_hpoly(self)


def from_h(x: HPoly) -> Laurent:
    total = Laurent._raw({}, 2)
    for n, c in x.coeffs.items():
        lifted = Laurent({(0, e[0]): v for e, v in c.terms.items()}, 2)
        total = total + lifted * H_n(n)
    return total


def h_basis(x: Laurent) -> HPoly:
    """Expand a Weyl-symmetric class as sum c_n(L) H_n by peeling the top w-power."""
    if x.nvars != 2:
        raise ValueError("GL(2) classes are Laurent polynomials in (w, L)")
    if not is_weyl_symmetric(x):
        raise SymmetryError("class is not invariant under w -> L/w")
    rest = x
    out: dict = {}
    while rest:
        top = max(e for e, _ in rest.terms)
        if top < 0:
            raise SymmetryError("symmetric remainder with only negative w-powers")
        c = rest.coefficient_in(W, top)
        out[top] = c
        lifted = Laurent({(0, e[0]): v for e, v in c.terms.items()}, 2)
        rest = rest - lifted * H_n(top)
    return HPoly(out)


# -- residues and the Weyl pairing ----------------------------------------------------------


def res0(f: Laurent, var: int = W):
    """Coefficient of w^{-1} (the residue of f dw at w = 0), in the remaining variables."""
    r = f.coefficient_in(var, -1)
    if r.nvars == 0:
        return r.terms.get((), 0)
    return r


def weyl_kernel() -> Laurent:
    return w() - L() * w(-1)


def weyl_pair(k: int, l: int) -> Laurent:
    """-1/2 Res_0[H_k H_l (w - L/w)^2 dw/w], asserted equal to L^{k+1} delta_{kl}."""
    kern = weyl_kernel()
    integrand = H_n(k) * H_n(l) * kern * kern * w(-1)
    value = res0(integrand) * Fraction(-1, 2)
    expected = Laurent.var(0, 1, k + 1) if k == l else Laurent._raw({}, 1)
    assert value == expected, (k, l, value)
    return value


def binom_series(n: int, x: Laurent) -> Laurent:
    """binomial(x, n) computed exactly over Q[L][w^{+-1}]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Laurent.constant(1, x.nvars)
    return binomial(x, n)


# -- exact division ----------------------------------------------------------------------------


def _divide_linear(num: Laurent, c: Laurent, step: int, var: int = W) -> Laurent:
    """num / (1 - c * w^step) for step = +-1, c free of w; DivisibilityError if inexact."""
    nv = num.nvars
    if not num:
        return num
    slices = num.group_by_var(var)
    lo, hi = min(slices), max(slices)
    zero = Laurent._raw({}, nv - 1)
    q: dict = {}
    if step == 1:
        prev = zero
        for e in range(lo, hi):
            prev = slices.get(e, zero) + c * prev
            q[e] = prev
        leftover = slices.get(hi, zero) + c * prev
    else:
        prev = zero
        for e in range(hi, lo, -1):
            prev = slices.get(e, zero) + c * prev
            q[e] = prev
        leftover = slices.get(lo, zero) + c * prev
    if leftover:
        raise DivisibilityError("nonzero remainder dividing by a linear factor in w", leftover)
    out = {}
    for e, sl in q.items():
        for rest, v in sl.terms.items():
            out[rest[:var] + (e,) + rest[var:]] = v
    return Laurent(out, nv)


def divide_by_e(num: Laurent) -> Laurent:
    """num / (1 - H + L) via the two factors (1 - w) and (1 - L/w).

    Works for Laurent polynomials in (w, L, extra symbols...).
    """
    nv = num.nvars
    one_rest = Laurent.constant(1, nv - 1)
    l_rest = Laurent.var(0, nv - 1)
    q = _divide_linear(num, one_rest, 1)
    return _divide_linear(q, l_rest, -1)


def exact_divide(num: Laurent, den: Laurent) -> Laurent:
    """Exact quotient; raises DivisibilityError (carrying the remainder) otherwise."""
    if den == 1:
        return num
    if den.nvars == 2 and den == E_class():
        return divide_by_e(num)
    return _generic_divide(num, den)


# -- rendering / serialization --------------------------------------------------------------------


def _mono(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def render_poly(terms: Mapping[tuple, object], names: tuple[str, ...]) -> str:
    """Generic rendering of a sparse polynomial, highest total degree first."""
    if not terms:
        return "0"
    items = sorted(terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
    out = []
    for exps, c in items:
        mono = " ".join(_mono(nm, k) for nm, k in zip(names, exps) if k)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a} {mono}"
        else:
            body = f"{a}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def render_gl2(x: Laurent) -> str:
    return render_poly(x.terms, ("w", "L"))


def render_lpoly(c: Laurent) -> str:
    return render_poly(c.terms, ("L",))


def render_hpoly(x: HPoly) -> str:
    if not x.coeffs:
        return "0"
    parts = []
    for n, c in x.coeffs.items():
        body = render_lpoly(c)
        if len(c.terms) > 1:
            body = f"({body})"
        if body == "1":
            parts.append(f"H_{n}")
        elif body == "-1":
            parts.append(f"-H_{n}")
        else:
            parts.append(f"{body} H_{n}")
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def gl2_to_json(x: Laurent) -> list[dict]:
    rows = []
    for e, c in sorted(x.group_by_var(W).items()):
        degs = [k[0] for k in c.terms]
        if min(degs) < 0:
            raise ValueError("JSON encoding needs nonnegative L-powers")
        poly = [0] * (max(degs) + 1)
        for (k,), v in c.terms.items():
            poly[k] = _json_num(v)
        rows.append({"w_exp": e, "L_poly": poly})
    return rows


def gl2_from_json(rows: list[dict]) -> Laurent:
    terms = {}
    for row in rows:
        for k, v in enumerate(row["L_poly"]):
            if v:
                terms[(row["w_exp"], k)] = Fraction(v) if isinstance(v, str) else v
    return Laurent(terms, 2)


def _json_num(v):
    v = as_rat(v)
    return v if isinstance(v, int) else str(v)
