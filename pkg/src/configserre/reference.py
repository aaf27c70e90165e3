"""Published tables, typed in by hand, and comparison against computed output.

The JSON under ``data/published`` is a transcription and is never regenerated.
Computed expansions live under ``data/generated`` instead, so agreement with
the printed tables and internal self-consistency stay separate questions.

A printed entry that disagrees with the computation is only called a misprint
when it fails an identity that any correct entry must satisfy, independently
of how the computation was done (see :func:`audit_level_n_row`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import gl2
from .gl2 import HPoly
from .laurent import Laurent
from .motive import MotiveClass, level1
from .partitions import IntPartition
from .symfun import FreeLambdaClass, irrep_dim


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    text = resources.files("configserre").joinpath("data").joinpath("published").joinpath(name).read_text(encoding="utf-8")
    return json.loads(text)


def published() -> dict:
    return _load("tables.json")


def parse_partition(label) -> IntPartition:
    """Accept [3, 1, 1], "3,1,1" or the compact "311" (parts below 10 only)."""
    if isinstance(label, (list, tuple)):
        return tuple(int(x) for x in label)
    label = str(label)
    if "," in label:
        return tuple(int(x) for x in label.split(","))
    return tuple(int(ch) for ch in label)


def _lpoly(coeffs) -> Laurent:
    return Laurent({(k,): c for k, c in enumerate(coeffs) if c}, 1)


def published_stirling() -> tuple[list[list[int]], list[list[int]]]:
    data = published()["stirling"]
    return data["first"], data["second"]


def published_phi() -> dict[IntPartition, FreeLambdaClass]:
    out = {}
    for label, terms in published()["phi"].items():
        spec = {}
        for t in terms:
            key = tuple((k, tuple(mu)) for k, mu in t["sigma"])
            spec[key] = spec.get(key, 0) + t["coeff"]
        out[parse_partition(label)] = FreeLambdaClass.from_sigma_basis(spec)
    return out


def published_phi_sigma() -> dict[IntPartition, dict[tuple, int]]:
    """The printed Phi polynomials as {((k, mu), ...): coeff}, without converting."""
    out = {}
    for label, terms in published()["phi"].items():
        spec = {}
        for t in terms:
            key = tuple(sorted((k, tuple(mu)) for k, mu in t["sigma"]))
            spec[key] = spec.get(key, 0) + t["coeff"]
        out[parse_partition(label)] = spec
    return out


def published_level_n() -> dict[int, dict[IntPartition, HPoly]]:
    rows: dict[int, dict[IntPartition, dict[int, Laurent]]] = {}
    for entry in published()["level_n"]:
        lam = tuple(entry["partition"])
        slot = rows.setdefault(entry["n"], {}).setdefault(lam, {})
        slot[entry["H"]] = slot.get(entry["H"], 0) + _lpoly(entry["L_poly"])
    return {n: {lam: HPoly(c) for lam, c in row.items()} for n, row in sorted(rows.items())}


@dataclass(frozen=True)
class PublishedRow:
    n: int
    equivariant: dict[IntPartition, MotiveClass]
    nonequivariant: MotiveClass
    euler: int


def published_m1n() -> list[PublishedRow]:
    rows = []
    for r in published()["m1n"]:
        eq = {parse_partition(k): MotiveClass.from_json(v) for k, v in r["equivariant"].items()}
        rows.append(PublishedRow(r["n"], eq, MotiveClass.from_json(r["nonequivariant"]), r["euler"]))
    return rows


def published_m1_11() -> tuple[list[tuple[int, int | None, int]], int]:
    data = published()["m1_11"]
    return [(t["L"], t["S"], t["coeff"]) for t in data["printed_terms"]], data["euler"]


def published_don_residues() -> dict[int, Fraction]:
    """|z + 1/z| -> residue."""
    return {int(k): Fraction(v) for k, v in published()["don_residues"].items()}


def published_quotient_euler(N: int) -> list[int]:
    """Power series of the printed rational function through x^N, by long division."""
    data = published()["quotient_euler"]
    num = _series_mul(data["prefactor"], data["numerator"], N)
    den = [1]
    for f in data["denominator_factors"]:
        den = _series_mul(den, f, N)
    out = [0] * (N + 1)
    rem = num + [0] * (N + 1 - len(num))
    for k in range(N + 1):
        q = Fraction(rem[k], den[0])
        out[k] = q
        for j, d in enumerate(den):
            if k + j <= N:
                rem[k + j] -= q * d
    return [int(c) for c in out]


def _series_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if i > N:
            break
        for j, y in enumerate(b):
            if i + j > N:
                break
            out[i + j] += x * y
    return out


# -- comparisons ---------------------------------------------------------------------------------


@dataclass
class Mismatch:
    where: str
    printed: str
    computed: str

    def __str__(self):
        return f"{self.where}: printed {self.printed} | computed {self.computed}"


def diff_maps(where: str, printed: dict, computed: dict, render=str) -> list[Mismatch]:
    out = []
    for key in sorted(set(printed) | set(computed), reverse=True):
        a, b = printed.get(key), computed.get(key)
        if (a or None) != (b or None):
            out.append(Mismatch(f"{where} {key}", render(a) if a is not None else "0", render(b) if b is not None else "0"))
    return out


def falling_product(n: int) -> Laurent:
    """(e - 1)(e - 2)...(e - n + 1) with e = 1 - H + L: the class of F(E, n)/E."""
    e = gl2.E_class()
    out = gl2.one()
    for j in range(1, n):
        out = out * (e - j)
    return out


@dataclass
class RowAudit:
    n: int
    underlying_class_ok: bool
    level_one_ok: bool
    level_one_mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.underlying_class_ok and self.level_one_ok


def audit_level_n_row(n: int, row: dict[IntPartition, HPoly], level_one: dict[IntPartition, MotiveClass]) -> RowAudit:
    """Two checks any correct level-N row passes.

    The dimension-weighted sum of the Schur coefficients must be the class of
    F(E, n)/E, and the Eichler-Shimura image must be the given level-one row.
    """
    total = Laurent._raw({}, 2)
    for lam, hp in row.items():
        total = total + gl2.from_h(hp) * irrep_dim(lam)
    underlying = total == falling_product(n)
    image = {lam: m for lam, hp in row.items() if (m := level1(hp))}
    mism = diff_maps(f"n={n} level one", level_one, image)
    return RowAudit(n, underlying, not mism, mism)


@dataclass
class M111Reading:
    matched: list[tuple[int | None, int | None, int]]
    unmatched_printed: list[tuple[int | None, int | None, int]]
    free_degrees: list[tuple[int, int | None]]
    placed_at: tuple[int, int | None] | None

    @property
    def ok(self) -> bool:
        return self.placed_at is not None


def read_m1_11(computed: MotiveClass) -> M111Reading:
    """Match printed terms to the computed class, allowing one duplicated exponent.

    Every printed term whose (L-power, cusp) key is unique must agree with the
    computed coefficient.  For a key printed twice, the term that agrees is
    matched there; the other must fit the one computed monomial left over.
    """
    printed, _ = published_m1_11()
    comp = dict(computed.terms)
    matched, leftover = [], []
    used = set()
    for a, s, c in printed:
        if (a, s) not in used and comp.get((a, s)) == c:
            matched.append((a, s, c))
            used.add((a, s))
        else:
            leftover.append((a, s, c))
    free = sorted(k for k in comp if k not in used)
    placed = None
    if len(leftover) == 1 and len(free) == 1 and comp[free[0]] == leftover[0][2]:
        placed = free[0]
    return M111Reading(matched, leftover, free, placed)
