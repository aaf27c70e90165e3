"""Rendering of tables as text, JSON and CSV, plus the CSV reader.

Every command produces a :class:`Table`: a flat list of entries (n, partition,
value) and a dict of extras.  Values are any of the coefficient types of the
package; :func:`terms_of` splits each into (monomial, coefficient) pairs, which
is what the JSON ``terms`` field and the CSV rows carry.

JSON layout (``format`` = ``configserre/1``)::

    {"format": "configserre/1", "command": str, "params": {...}, "basis": str,
     "rows": [{"n": int, "partition": [int, ...] | null,
               "text": str, "terms": [{"monomial": str, "coeff": int | "p/q"}]}],
     "extras": {...}}

CSV columns are ``n,partition,monomial,coefficient``; the partition is written
as comma-separated parts and left empty for entries without one.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import gl2
from .configspace import render_phi
from .laurent import Laurent
from .motive import MotiveClass
from .symfun import FreeLambdaClass, partition_label, render_sigma_monomial

JSON_FORMAT = "configserre/1"
CSV_HEADER = ("n", "partition", "monomial", "coefficient")


@dataclass
class Entry:
    n: int
    partition: tuple[int, ...] | None
    value: Any
    label: str | None = None


@dataclass
class Table:
    command: str
    params: dict
    basis: str = "schur"
    entries: list[Entry] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    text: str | None = None


def number(v) -> int | str:
    """JSON form of an exact number: int, or the string "p/q"."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return int(v)


def parse_number(s) -> int | Fraction:
    if isinstance(s, int):
        return s
    q = Fraction(s)
    return q.numerator if q.denominator == 1 else q


def _power(name: str, k: int) -> str:
    return "" if k == 0 else name if k == 1 else f"{name}^{k}"


def _join(*parts: str) -> str:
    return " ".join(p for p in parts if p) or "1"


def _as_hpoly(x: Laurent) -> gl2.HPoly | None:
    if x.nvars == 2 and gl2.is_weyl_symmetric(x):
        try:
            return gl2.h_basis(x)
        except gl2.SymmetryError:
            return None
    return None


def terms_of(value) -> list[tuple[str, int | Fraction]]:
    """(monomial, coefficient) pairs in a fixed order."""
    if isinstance(value, (int, Fraction)):
        return [("1", value)] if value else []
    if isinstance(value, MotiveClass):
        return [(_join(_power("L", a), f"S{s}" if s else ""), c) for (a, s), c in value.sorted_terms()]
    if isinstance(value, gl2.HPoly):
        out = []
        for k, c in value.coeffs.items():
            for (a,), v in sorted(c.terms.items(), reverse=True):
                out.append((_join(_power("L", a), f"H_{k}"), v))
        return out
    if isinstance(value, FreeLambdaClass):
        return [(render_sigma_monomial(key), c) for key, c in value.to_sigma_basis().items()]
    if isinstance(value, Laurent):
        hp = _as_hpoly(value)
        if hp is not None:
            return terms_of(hp)
        names = ("w", "L") if value.nvars == 2 else ("L",) if value.nvars == 1 else tuple(f"x{i}" for i in range(value.nvars))
        items = sorted(value.terms.items(), key=lambda t: tuple(-x for x in t[0]))
        return [(_join(*(_power(nm, k) for nm, k in zip(names, e))), c) for e, c in items]
    raise TypeError(f"cannot render {type(value).__name__}")


def entry_terms(entry: Entry) -> list[tuple[str, int | Fraction]]:
    """Scalar entries with a label use the label as their monomial."""
    if entry.label is not None and isinstance(entry.value, (int, Fraction)):
        return [(entry.label, entry.value)]
    return terms_of(entry.value)


def text_of(value) -> str:
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, MotiveClass):
        return str(value)
    if isinstance(value, gl2.HPoly):
        return gl2.render_hpoly(value)
    if isinstance(value, FreeLambdaClass):
        return render_phi(value)
    if isinstance(value, Laurent):
        hp = _as_hpoly(value)
        if hp is not None:
            return gl2.render_hpoly(hp)
        if value.nvars == 1:
            return gl2.render_lpoly(value)
        return gl2.render_gl2(value)
    return str(value)


def basis_symbol(basis: str, lam: tuple[int, ...]) -> str:
    if basis == "phi":
        return "Phi_" + partition_label(lam)
    if basis == "powersum":
        return "p_" + (partition_label(lam) if lam else "0")
    return "s_" + partition_label(lam)


# -- text -------------------------------------------------------------------------------------------


def render_text(table: Table) -> str:
    if table.text is not None:
        return table.text
    lines = []
    current = None
    for entry in table.entries:
        if entry.n != current:
            current = entry.n
            lines.append(f"n = {entry.n}")
        if entry.label is not None:
            head = entry.label
        elif entry.partition is None:
            head = "total"
        else:
            head = basis_symbol(table.basis, entry.partition)
        lines.append(f"  {head}: {text_of(entry.value)}")
    for key, val in table.extras.items():
        lines.append(f"{key}: {_text_extra(val)}")
    return "\n".join(lines) + "\n"


def _text_extra(val) -> str:
    if isinstance(val, dict):
        return ", ".join(f"{k}={_text_extra(v)}" for k, v in val.items())
    if isinstance(val, list):
        return " ".join(_text_extra(v) for v in val)
    if isinstance(val, bool):
        return "ok" if val else "FAILED"
    return str(val)


# -- JSON -------------------------------------------------------------------------------------------


def table_to_json(table: Table) -> dict:
    rows = []
    for entry in table.entries:
        row = {
            "n": entry.n,
            "partition": list(entry.partition) if entry.partition is not None else None,
        }
        if entry.label is not None:
            row["label"] = entry.label
        row["text"] = text_of(entry.value)
        row["terms"] = [{"monomial": m, "coeff": number(c)} for m, c in entry_terms(entry)]
        rows.append(row)
    return {
        "format": JSON_FORMAT,
        "command": table.command,
        "params": table.params,
        "basis": table.basis,
        "rows": rows,
        "extras": _jsonable(table.extras),
    }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return number(x)
    return text_of(x)


def render_json(table: Table) -> str:
    return json.dumps(table_to_json(table), indent=1, ensure_ascii=True) + "\n"


# -- CSV --------------------------------------------------------------------------------------------


@dataclass(frozen=True)
class CsvRow:
    n: int
    partition: tuple[int, ...] | None
    monomial: str
    coefficient: int | Fraction


def csv_rows(table: Table) -> list[CsvRow]:
    out = []
    for entry in table.entries:
        for mono, c in entry_terms(entry):
            out.append(CsvRow(entry.n, entry.partition, mono, parse_number(number(c))))
    return out


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in csv_rows(table):
        part = ",".join(map(str, row.partition)) if row.partition is not None else ""
        writer.writerow((row.n, part, row.monomial, number(row.coefficient)))
    return buf.getvalue()


def parse_csv(text: str) -> list[CsvRow]:
    """Inverse of :func:`render_csv` on the row level."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"expected CSV header {','.join(CSV_HEADER)}")
    out = []
    for rec in reader:
        if not rec:
            continue
        n, part, mono, coeff = rec
        partition = tuple(int(x) for x in part.split(",")) if part else None
        out.append(CsvRow(int(n), partition, mono, parse_number(coeff)))
    return out


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(table: Table, fmt: str) -> str:
    return RENDERERS[fmt](table)
