"""Command-line front end.

Exit codes: 0 on success, 1 when an exact check fails (a short counterexample
is printed), 2 on usage errors.  Output depends only on the arguments.
"""

from __future__ import annotations

import argparse
import difflib
import sys
from importlib import resources
from pathlib import Path

from . import arnold, moduli, output
from .configspace import SerreInput, config_serre, phi_polynomials
from .gl2 import E_class
from .output import Entry, Table
from .partitions import descending_identity, partitions_of, stirling_matrices
from .symfun import p_to_schur
from .verify import FAIL, MISPRINT, OK, SUITES, run_suites

STIRLING_CAP = 40
PHI_CAP = 6
FREE_CAP = 6
GL2_CAP = moduli.LEVEL_N_BOUND
UNIT_CAP = 16

# golden file -> the arguments that regenerate it
GOLDEN = {
    "stirling_6.txt": ["stirling", "--n", "6"],
    "stirling_12.json": ["stirling", "--n", "12", "--format", "json"],
    "os_5_characters.json": ["os", "--n", "5", "--characters", "--format", "json"],
    "os_4_components.json": ["os", "--n", "4", "--components", "--format", "json"],
    "phi_4.txt": ["phi", "--max-weight", "4"],
    "phi_6.json": ["phi", "--max-weight", "6", "--format", "json"],
    "config_serre_gl2_2.json": ["config-serre", "--ring", "gl2", "--max-n", "2", "--format", "json"],
    "level_n_5.txt": ["level-n", "--max-n", "5"],
    "level_n_6.json": ["level-n", "--max-n", "6", "--format", "json"],
    "m1n_5.json": ["m1n", "--n", "5", "--format", "json"],
    "m1n_11.txt": ["m1n", "--n", "11"],
    "m1n_table_12.csv": ["m1n-table", "--max-n", "12", "--format", "csv"],
    "m1n_table_12.json": ["m1n-table", "--max-n", "12", "--format", "json"],
    "quotient_12.json": ["quotient", "--max-n", "12", "--format", "json"],
}


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, message: str, table: Table | None = None):
        super().__init__(message)
        self.table = table


def _bound(value: int, lo: int, hi: int, flag: str) -> int:
    if not lo <= value <= hi:
        raise UsageError(f"{flag} must be between {lo} and {hi}, got {value}")
    return value


# -- commands ------------------------------------------------------------------------------------------


def cmd_stirling(args) -> Table:
    N = _bound(args.n, 1, STIRLING_CAP, "--n")
    mats = stirling_matrices(N)
    ident = mats.product() == [[int(i == j) for j in range(N)] for i in range(N)]
    desc = all(descending_identity(n) for n in range(N + 1))
    entries = []
    for name, mat in (("s", mats.first), ("S", mats.second)):
        for i in range(N):
            for j in range(i + 1):
                entries.append(Entry(i + 1, None, mat[i][j], f"{name}({i + 1},{j + 1})"))
    extras = {
        "first": [list(r) for r in mats.first],
        "second": [list(r) for r in mats.second],
        "product_is_identity": ident,
        "descending_identity": desc,
    }
    width = max(len(str(x)) for m in (mats.first, mats.second) for r in m for x in r)
    lines = []
    for name, mat in (("s(n,k)", mats.first), ("S(n,k)", mats.second)):
        lines.append(f"{name}, 1 <= n,k <= {N}")
        for row in mat:
            lines.append(" ".join(str(x).rjust(width) for x in row))
        lines.append("")
    lines.append(f"s . S = I: {'ok' if ident else 'FAILED'}")
    lines.append(f"sum_k s(n,k) x^k = x(x-1)...(x-n+1) for n <= {N}: {'ok' if desc else 'FAILED'}")
    table = Table("stirling", {"n": N}, "none", entries, extras, "\n".join(lines) + "\n")
    if not (ident and desc):
        raise CheckFailed("Stirling identities fail", table)
    return table


def _edge_list(m) -> list[list[int]]:
    return [list(e) for e in m]


def cmd_os(args) -> Table:
    n = _bound(args.n, 1, arnold.DEFAULT_CAP, "--n")
    params = {"n": n}
    if args.characters:
        params["view"] = "characters"
        entries, lines = [], [f"traces on H^d(F(C,{n})) by cycle type"]
        types = partitions_of(n)
        lines.append("d    " + " ".join(output.partition_label(mu).rjust(8) for mu in types))
        for k in range(n, 0, -1):
            chi = arnold.character_of(n, k)
            for mu in types:
                entries.append(Entry(n, mu, chi(mu), f"H^{n - k}"))
            lines.append(f"{n - k:<4} " + " ".join(str(chi(mu)).rjust(8) for mu in types))
        hs = arnold.hanlon_stanley(n)
        euler = arnold.euler_character(n, 1)
        ok = all(hs(mu) == euler(mu) for mu in types)
        lines.append(f"top degree against the closed form: {'ok' if ok else 'FAILED'}")
        table = Table("os", params, "cycle-type", entries, {"closed_form_top_degree": ok}, "\n".join(lines) + "\n")
        if not ok:
            raise CheckFailed("top-degree character differs from the closed form", table)
        return table
    if args.acyclic:
        params["view"] = "acyclic"
        if n < 2:
            raise UsageError("--acyclic needs --n >= 2")
        rep = arnold.check_acyclic(n)
        extras = {
            "dims": rep.dims,
            "ranks": rep.ranks,
            "homology": rep.homology,
            "d_squared_zero": rep.d_squared_zero,
            "homotopy": rep.homotopy_ok,
            "exact": rep.exact,
        }
        entries = [Entry(n, None, dim, f"dim H^{d}") for d, dim in enumerate(rep.dims)]
        table = Table("os", params, "none", entries, extras)
        if not rep.exact:
            raise CheckFailed(f"complex not exact: homology {rep.homology}", table)
        return table
    if args.components:
        params["view"] = "components"
        extras, lines = {}, []
        for k in range(n, 0, -1):
            comps = []
            for comp in arnold.component_decompose(n, k):
                comps.append({"blocks": [list(b) for b in comp.J.blocks], "basis": [_edge_list(m) for m in comp.basis]})
                mons = " ".join("".join(f"w{a}{b}" for a, b in m) or "1" for m in comp.basis)
                lines.append(f"H^{n - k} {comp.J}: {mons}")
            extras[f"H^{n - k}"] = comps
        entries = [Entry(n, None, len(c["basis"]), f"{key} {c['blocks']}") for key, cs in extras.items() for c in cs]
        return Table("os", params, "none", entries, extras, "\n".join(lines) + "\n")
    params["view"] = "rank"
    entries = [Entry(n, None, len(arnold.os_basis(n, n - d)), f"dim H^{d}") for d in range(n)]
    ok = arnold.basis_count_matches(n)
    table = Table("os", params, "none", entries, {"stirling_counts": ok})
    if not ok:
        raise CheckFailed("basis counts differ from |s(n,k)|", table)
    return table


def cmd_phi(args) -> Table:
    W = _bound(args.max_weight, 1, PHI_CAP, "--max-weight")
    phis = phi_polynomials(W)
    entries = [Entry(sum(lam), lam, phis[lam]) for n in range(1, W + 1) for lam in partitions_of(n)]
    return Table("phi", {"max_weight": W}, "phi", entries)


def _series_entries(series, basis: str) -> list[Entry]:
    entries = []
    if basis == "powersum":
        for lam in sorted(series.terms, key=lambda l: (sum(l), [-x for x in l])):
            if lam:
                entries.append(Entry(sum(lam), lam, series.terms[lam]))
        return entries
    for n, coeffs in p_to_schur(series).items():
        if n == 0:
            continue
        for lam in partitions_of(n):
            if lam in coeffs:
                entries.append(Entry(n, lam, coeffs[lam]))
    return entries


def cmd_config_serre(args) -> Table:
    ring = args.ring
    if ring == "free":
        N = _bound(args.max_n, 1, FREE_CAP, "--max-n")
        inp = SerreInput.free(N)
    elif ring == "gl2":
        N = _bound(args.max_n, 1, GL2_CAP, "--max-n")
        inp = SerreInput.unit(E_class(), N)
    else:
        N = _bound(args.max_n, 1, UNIT_CAP, "--max-n")
        inp = SerreInput.unit(args.value, N)
    series = config_serre(inp, N)
    params = {"ring": ring, "max_n": N}
    if ring == "unit":
        params["value"] = args.value
    return Table("config-serre", params, args.basis, _series_entries(series, args.basis))


def cmd_level_n(args) -> Table:
    N = _bound(args.max_n, 1, moduli.LEVEL_N_BOUND, "--max-n")
    table = moduli.level_n_table(N)
    entries = [Entry(n, lam, row[lam]) for n, row in table.items() for lam in partitions_of(n) if lam in row]
    return Table("level-n", {"max_n": N}, "schur", entries)


def _row_entries(row) -> list[Entry]:
    out = [Entry(row.n, lam, row.equivariant[lam]) for lam in partitions_of(row.n) if lam in row.equivariant]
    out.append(Entry(row.n, None, row.nonequivariant, "underlying"))
    out.append(Entry(row.n, None, row.euler, "chi"))
    return out


def cmd_m1n(args) -> Table:
    n = _bound(args.n, 1, moduli.TABLE_BOUND, "--n")
    row = moduli.m1n_row(n)
    return Table("m1n", {"n": n}, args.basis, _row_entries(row))


def cmd_m1n_table(args) -> Table:
    N = _bound(args.max_n, 1, moduli.TABLE_BOUND, "--max-n")
    entries = [e for row in moduli.m1n_table(N) for e in _row_entries(row)]
    return Table("m1n-table", {"max_n": N}, args.basis, entries)


def cmd_quotient(args) -> Table:
    N = _bound(args.max_n, 1, moduli.TABLE_BOUND, "--max-n")
    rep = moduli.quotient_series(N)
    entries = []
    for n in range(1, N + 1):
        entries.append(Entry(n, None, rep.invariants[n], "invariants"))
        entries.append(Entry(n, None, rep.serre[n], "Serre"))
        entries.append(Entry(n, None, rep.euler[n], "chi"))
    table = Table("quotient", {"max_n": N}, "none", entries, {"checks": dict(rep.checks)})
    if not rep.ok:
        bad = [k for k, v in rep.checks.items() if not v]
        raise CheckFailed(f"quotient identities fail: {bad}", table)
    return table


def golden_dir() -> Path:
    return Path(str(resources.files("configserre").joinpath("data").joinpath("generated")))


def render_argv(argv: list[str]) -> str:
    code, text = run(argv)
    if code:
        raise RuntimeError(f"{' '.join(argv)} exited with {code}")
    return text


def golden_results(directory: Path | None = None) -> list:
    from .verify import CheckResult

    directory = directory or golden_dir()
    out = []
    for name, argv in GOLDEN.items():
        path = directory / name
        if not path.exists():
            out.append(CheckResult(f"golden {name}", FAIL, [f"missing file {path}"]))
            continue
        want = path.read_text(encoding="utf-8")
        got = render_argv(argv)
        if got == want:
            out.append(CheckResult(f"golden {name}", OK))
        else:
            diff = list(difflib.unified_diff(want.splitlines(), got.splitlines(), "stored", "computed", lineterm="", n=0))
            out.append(CheckResult(f"golden {name}", FAIL, diff[2:7]))
    return out


def cmd_golden(args) -> Table:
    directory = Path(args.dir) if args.dir else golden_dir()
    if args.write:
        directory.mkdir(parents=True, exist_ok=True)
        lines = []
        for name, argv in GOLDEN.items():
            (directory / name).write_text(render_argv(argv), encoding="utf-8")
            lines.append(f"wrote {name}: configserre {' '.join(argv)}")
        return Table("golden", {"write": True}, "none", text="\n".join(lines) + "\n")
    return _report("golden", golden_results(directory))


def _report(name: str, results) -> Table:
    lines = [line for r in results for line in r.lines()]
    failed = [r for r in results if r.failed]
    counts = {status: sum(r.status == status for r in results) for status in (OK, MISPRINT, FAIL)}
    lines.append(f"{counts[OK]} ok, {counts[MISPRINT]} printed misprint(s), {counts[FAIL]} failed")
    extras = {"results": [{"name": r.name, "status": r.status, "details": r.details} for r in results]}
    table = Table("verify", {"suite": name}, "none", [], extras, "\n".join(lines) + "\n")
    if failed:
        raise CheckFailed(f"{len(failed)} check(s) failed", table)
    return table


def cmd_verify(args) -> Table:
    names = list(SUITES) if args.suite == "all" else [] if args.suite == "golden" else [args.suite]
    results = run_suites(names)
    if args.suite in ("golden", "all"):
        results += golden_results()
    return _report(args.suite, results)


# -- parser -----------------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="echo the resolved command to stderr")

    parser = _Parser(prog="configserre", description="Exact Serre characteristics of configuration spaces and M_1,n.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("stirling", parents=[common], help="Stirling matrices s and S with their identities")
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("os", parents=[common], help="cohomology of the configuration space of n points in C")
    p.add_argument("--n", type=int, required=True)
    view = p.add_mutually_exclusive_group()
    view.add_argument("--rank", action="store_true", help="dimensions by degree (default)")
    view.add_argument("--characters", action="store_true")
    view.add_argument("--acyclic", action="store_true")
    view.add_argument("--components", action="store_true")
    p.set_defaults(func=cmd_os)

    p = sub.add_parser("phi", parents=[common], help="Schur coefficients over the free lambda-ring")
    p.add_argument("--max-weight", type=int, default=4)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("config-serre", parents=[common], help="configuration series for a chosen coefficient ring")
    p.add_argument("--ring", choices=("unit", "gl2", "free"), default="unit")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--basis", choices=("schur", "powersum"), default="schur")
    p.add_argument("--value", type=int, default=1, help="E(n) for the unit ring (an integer)")
    p.set_defaults(func=cmd_config_serre)

    p = sub.add_parser("level-n", parents=[common], help="level-N table in the H_k basis")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_level_n)

    p = sub.add_parser("m1n", parents=[common], help="one row of the M_1,n table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("schur",), default="schur")
    p.set_defaults(func=cmd_m1n)

    p = sub.add_parser("m1n-table", parents=[common], help="rows n = 1..N of the M_1,n table")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--basis", choices=("schur",), default="schur")
    p.set_defaults(func=cmd_m1n_table)

    p = sub.add_parser("quotient", parents=[common], help="generating series of M_1,n/S_n")
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", parents=[common], help="run exact verification suites")
    p.add_argument("--suite", choices=(*SUITES, "golden", "all"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("golden", parents=[common], help="diff or rewrite the generated golden files")
    p.add_argument("--write", action="store_true")
    p.add_argument("--dir", help="golden directory (default: the package data)")
    p.set_defaults(func=cmd_golden)
    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Parse and execute; returns (exit code, rendered output)."""
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0), ""
        if args.verbose:
            print(f"configserre {' '.join(argv)}", file=sys.stderr)
        table = args.func(args)
    except UsageError as exc:
        return 2, f"{exc}\n"
    except CheckFailed as exc:
        body = output.render(exc.table, args.format) if exc.table is not None else ""
        return 1, body + f"error: {exc}\n"
    return 0, output.render(table, args.format)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return 0 if argv else 2
    code, text = run(argv)
    target = _output_path(argv)
    if code == 2:
        sys.stderr.write(text)
    elif target and code == 0:
        Path(target).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def _output_path(argv: list[str]) -> str | None:
    for i, a in enumerate(argv):
        if a == "--output" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--output="):
            return a.split("=", 1)[1]
    return None


if __name__ == "__main__":
    sys.exit(main())
