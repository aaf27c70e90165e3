"""Level-one answers: classes in Z[L] + sum_l Z[L] S_l.

Eichler-Shimura turns the Hodge local system classes H_n on the modular curve
into Eisenstein and cusp-form symbols; the level-one augmentation then keeps
only L and the cusp symbols S_l of nonzero dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .gl2 import HPoly
from .laurent import Laurent

EISENSTEIN, CUSP = "Sigma", "S"


def cusp_dim(l: int) -> int:
    """Dimension of the space of level-one cusp forms of weight l."""
    if l % 2 or l < 12 or l == 14:
        return 0
    return l // 12 - (1 if l % 12 == 2 else 0)


@dataclass(frozen=True, order=True)
class ESSymbol:
    kind: str
    weight: int

    def __post_init__(self):
        if self.kind not in (EISENSTEIN, CUSP):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.weight < 2:
            raise ValueError("weights start at 2")

    def __str__(self):
        return f"{self.kind}{self.weight}"


@dataclass(frozen=True)
class ESClass:
    """Z[L]-combination of 1, Sigma_l and S_l: key (L-power, symbol or None) -> int."""

    terms: Mapping[tuple, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    def __add__(self, other: "ESClass") -> "ESClass":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ESClass(out)

    def __eq__(self, other):
        return isinstance(other, ESClass) and self.terms == other.terms

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda t: (t[0][1] is not None, str(t[0][1]), -t[0][0]))
        return _render(((a, str(s) if s else None), c) for (a, s), c in items)


class MotiveClass:
    """Element of Z[L] + sum_l Z[L] S_l, keyed by (L-power, cusp weight or None)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        out: dict = {}
        for (a, s), c in (terms or {}).items():
            if s is not None and cusp_dim(s) == 0:
                continue
            if a < 0:
                raise ValueError("negative power of L in a motive class")
            if c:
                if int(c) != c:
                    raise ValueError(f"non-integral coefficient {c}")
                out[(a, s)] = out.get((a, s), 0) + int(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def L(cls, power: int = 1) -> "MotiveClass":
        return cls({(power, None): 1})

    @classmethod
    def S(cls, weight: int) -> "MotiveClass":
        return cls({(0, weight): 1})

    @classmethod
    def from_lpoly(cls, c: Laurent) -> "MotiveClass":
        return cls({(e[0], None): v for e, v in c.terms.items()})

    def _coerce(self, other):
        if isinstance(other, MotiveClass):
            return other
        if isinstance(other, int):
            return MotiveClass({(0, None): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return MotiveClass(out)

    __radd__ = __add__

    def __neg__(self):
        return MotiveClass({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (a, s), c in self.terms.items():
            for (b, t), d in o.terms.items():
                # degree <= 1 in the cusp symbols is an invariant of every output
                assert s is None or t is None, "product of two cusp symbols"
                key = (a + b, s if s is not None else t)
                out[key] = out.get(key, 0) + c * d
        return MotiveClass(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MotiveClass({self.terms!r})"

    def __str__(self):
        return _render(((a, f"S{s}" if s else None), c) for (a, s), c in self.sorted_terms())

    def sorted_terms(self) -> list:
        """Terms by decreasing weight (L has weight 2, S_l weight l-1)."""
        return sorted(self.terms.items(), key=lambda t: (-weight(t[0]), t[0][1] is not None))

    def cusp_symbols(self) -> set[int]:
        return {s for _, s in self.terms if s is not None}

    def l_coefficient(self, a: int, cusp: int | None = None) -> int:
        return self.terms.get((a, cusp), 0)

    def to_json(self) -> list[dict]:
        return [{"L": a, "S": s, "coeff": c} for (a, s), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "MotiveClass":
        return cls({(r["L"], r["S"]): r["coeff"] for r in rows})


def weight(key: tuple) -> int:
    a, s = key
    return 2 * a + (s - 1 if s is not None else 0)


def _render(items) -> str:
    parts = []
    for (a, sym), c in items:
        mono = " ".join(x for x in ("L" if a == 1 else f"L^{a}" if a else "", sym or "") if x)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag} {mono}" if mono else f"{mag}")
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# -- substitution, augmentation and specializations ------------------------------------------------


def es_substitute(x: HPoly) -> ESClass:
    """H_n -> delta_{n0} (L + 1) - Sigma_{n+2} - S_{n+2}, linearly over Z[L]."""
    out: dict = {}

    def add(key, v):
        out[key] = out.get(key, 0) + v

    for n, c in x.coeffs.items():
        for (a,), v in c.terms.items():
            if int(v) != v:
                raise ValueError(f"non-integral coefficient {v} of H_{n}")
            v = int(v)
            if n == 0:
                add((a + 1, None), v)
                add((a, None), v)
            add((a, ESSymbol(EISENSTEIN, n + 2)), -v)
            add((a, ESSymbol(CUSP, n + 2)), -v)
    return ESClass(out)


def augment_level1(x: ESClass) -> MotiveClass:
    """Sigma_l -> 1 for even l and 0 for odd l; S_l(N) -> S_l (zero if no cusp forms)."""
    out: dict = {}
    for (a, sym), v in x.terms.items():
        if sym is None:
            key = (a, None)
        elif sym.kind == EISENSTEIN:
            if sym.weight % 2:
                continue
            key = (a, None)
        else:
            if cusp_dim(sym.weight) == 0:
                continue
            key = (a, sym.weight)
        out[key] = out.get(key, 0) + v
    return MotiveClass(out)


def level1(x: HPoly) -> MotiveClass:
    return augment_level1(es_substitute(x))


def euler_specialize(x: MotiveClass) -> int:
    """L -> 1 and S_l -> 2 dim S_l."""
    return sum(c * (2 * cusp_dim(s) if s is not None else 1) for (a, s), c in x.terms.items())


def hodge_specialize(x: MotiveClass) -> Laurent:
    """Weight polynomial in t: L -> t^2, S_l -> 2 dim(S_l) t^{l-1}."""
    terms: dict = {}
    for (a, s), c in x.terms.items():
        if s is None:
            deg, mult = 2 * a, 1
        else:
            deg, mult = 2 * a + s - 1, 2 * cusp_dim(s)
        terms[(deg,)] = terms.get((deg,), 0) + c * mult
    return Laurent(terms, 1)


def from_laurent(x: Laurent, cusp_weights: tuple[int, ...]) -> MotiveClass:
    """Convert a Laurent polynomial in (L, S_{l1}, S_{l2}, ...) of S-degree <= 1."""
    out: dict = {}
    for e, c in x.terms.items():
        a, svec = e[0], e[1:]
        deg = sum(svec)
        if any(k < 0 for k in svec) or deg > 1:
            raise AssertionError(f"cusp symbols of degree {deg} in {e}")
        s = cusp_weights[svec.index(1)] if deg else None
        if s is not None and cusp_dim(s) == 0:
            continue
        if a < 0:
            raise ValueError(f"negative power of L survived: {e}")
        out[(a, s)] = out.get((a, s), 0) + c
    return MotiveClass(out)
