import json
import subprocess
import sys

import pytest

from configserre import cli, output
from configserre.output import parse_csv


def run(*argv):
    return cli.run(list(argv))


def test_usage_errors_exit_2():
    assert run("stirling", "--n", "0")[0] == 2
    assert run("m1n", "--n", "13")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("os", "--n", "1", "--acyclic")[0] == 2
    assert run("config-serre", "--ring", "gl2", "--max-n", "9")[0] == 2
    assert run("m1n", "--n", "3", "--basis", "powersum")[0] == 2


def test_failed_check_exits_1_with_counterexample(monkeypatch):
    monkeypatch.setattr(cli.arnold, "basis_count_matches", lambda n: False)
    code, text = run("os", "--n", "3")
    assert code == 1
    assert text.splitlines()[-1].startswith("error:")


def test_stirling_text():
    code, text = run("stirling", "--n", "3")
    assert code == 0
    assert "s . S = I: ok" in text


def test_output_is_deterministic():
    argv = ["m1n-table", "--max-n", "6", "--format", "json"]
    assert run(*argv) == run(*argv)


def test_csv_round_trip():
    code, text = run("m1n", "--n", "5", "--format", "csv")
    assert code == 0
    rows = parse_csv(text)
    assert (5, (3, 2), "L^2", 1) in [(r.n, r.partition, r.monomial, r.coefficient) for r in rows]
    assert text.splitlines()[4] == '5,"4,1",L^3,-1'
    table = cli.cmd_m1n(cli.build_parser().parse_args(["m1n", "--n", "5"]))
    assert rows == output.csv_rows(table)


def test_empty_csv_is_header_only():
    code, text = run("verify", "--suite", "quotient", "--format", "csv")
    assert code == 0
    assert text == ",".join(output.CSV_HEADER) + "\n"
    assert parse_csv(text) == []


def test_csv_rejects_wrong_header():
    with pytest.raises(ValueError):
        parse_csv("a,b\n")


def test_json_layout():
    code, text = run("config-serre", "--ring", "gl2", "--max-n", "2", "--format", "json")
    data = json.loads(text)
    assert data["format"] == output.JSON_FORMAT
    assert [row["partition"] for row in data["rows"] if row["n"] == 2] == [[2], [1, 1]]
    code, text = run("level-n", "--max-n", "2", "--format", "json")
    assert [row["partition"] for row in json.loads(text)["rows"]] == [[1], [2], [1, 1]]


def test_powersum_basis():
    code, text = run("config-serre", "--value", "3", "--max-n", "3", "--basis", "powersum")
    assert code == 0 and "p_1" in text


def test_unit_ring_rows():
    code, text = run("config-serre", "--value", "3", "--max-n", "4")
    # (1 + p_1)^3 = 1 + 3 s_1 + 3 (s_2 + s_11) + (s_3 + 2 s_21 + s_111)
    assert "s_21: 2" in text
    assert "n = 4" not in text


def test_m1n_text():
    code, text = run("m1n", "--n", "11")
    assert code == 0
    assert "chi: -302400" in text
    assert "S12" in text


@pytest.mark.parametrize("view", ["--rank", "--characters", "--acyclic", "--components"])
def test_os_views(view):
    assert run("os", "--n", "4", view)[0] == 0


def test_verify_suites_exit_zero_and_report_the_misprint():
    code, text = run("verify", "--suite", "tables")
    assert code == 0
    assert "MISPRINT level-N table row 5" in text
    assert text.splitlines()[-1].endswith("0 failed")


def test_golden_files_are_current():
    results = cli.golden_results()
    assert results and all(r.status == "ok" for r in results), [r.lines() for r in results if r.failed]


def test_golden_write_to_a_directory(tmp_path, monkeypatch):
    monkeypatch.setattr(cli, "GOLDEN", {"stirling_6.txt": ["stirling", "--n", "6"]})
    assert run("golden", "--write", "--dir", str(tmp_path))[0] == 0
    assert run("golden", "--dir", str(tmp_path))[0] == 0
    (tmp_path / "stirling_6.txt").write_text("changed\n")
    code, text = run("golden", "--dir", str(tmp_path))
    assert code == 1 and "FAIL" in text


def test_main_writes_output_file(tmp_path):
    target = tmp_path / "out.txt"
    assert cli.main(["stirling", "--n", "4", "--output", str(target)]) == 0
    assert target.read_text() == run("stirling", "--n", "4")[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "configserre", "stirling", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == run("stirling", "--n", "2")[1]
    proc = subprocess.run([sys.executable, "-m", "configserre"], capture_output=True, text=True)
    assert proc.returncode == 2
