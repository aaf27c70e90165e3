import pytest

from configserre import reference, verify
from configserre.gl2 import HPoly
from configserre.laurent import Laurent
from configserre.moduli import level_n_table, m1n_row, m1n_table
from configserre.partitions import stirling_matrices


def lp(*coeffs):
    return Laurent({(i,): c for i, c in enumerate(coeffs) if c}, 1)


def test_parse_partition():
    assert reference.parse_partition("311") == (3, 1, 1)
    assert reference.parse_partition("3,1,1") == (3, 1, 1)
    assert reference.parse_partition([2, 2]) == (2, 2)


def test_transcribed_stirling_rows():
    first, second = reference.published_stirling()
    mats = stirling_matrices(5)
    assert [list(r) for r in mats.first] == [r + [0] * (5 - len(r)) for r in first]
    assert [list(r) for r in mats.second] == [r + [0] * (5 - len(r)) for r in second]


@pytest.mark.parametrize("n", range(1, 5))
def test_level_n_rows_one_to_four_match(n):
    assert reference.published_level_n()[n] == level_n_table(5)[n]


def test_level_n_row_five_differs_in_three_entries():
    printed = reference.published_level_n()[5]
    computed = level_n_table(5)[5]
    diff = reference.diff_maps("n=5", printed, computed)
    assert {d.where for d in diff} == {"n=5 (3, 2)", "n=5 (3, 1, 1)", "n=5 (2, 2, 1)"}
    assert computed[(3, 2)] == HPoly({0: lp(0, 1), 1: lp(0, -1, 1), 2: lp(1, -1)})
    assert computed[(3, 1, 1)] == HPoly({1: lp(1), 2: lp(0, -1, 1), 3: lp(1)})
    assert computed[(2, 2, 1)] == HPoly({1: lp(0, -1), 2: lp(1)})


def test_row_audit_separates_the_two_rows():
    level_one = {r.n: r.equivariant for r in reference.published_m1n()}
    ours = reference.audit_level_n_row(5, level_n_table(5)[5], level_one[5])
    theirs = reference.audit_level_n_row(5, reference.published_level_n()[5], level_one[5])
    assert ours.consistent
    assert not theirs.underlying_class_ok
    assert not theirs.level_one_ok
    for n in range(1, 5):
        assert reference.audit_level_n_row(n, reference.published_level_n()[n], level_one[n]).consistent


@pytest.mark.parametrize("n", range(1, 6))
def test_level_one_rows_match(n):
    pub = reference.published_m1n()[n - 1]
    row = m1n_table(5)[n - 1]
    assert pub.equivariant == row.equivariant
    assert pub.nonequivariant == row.nonequivariant
    assert pub.euler == row.euler


def test_m1_11_reading():
    reading = reference.read_m1_11(m1n_row(11).nonequivariant)
    assert reading.ok
    assert len(reading.unmatched_printed) == 1
    assert reading.unmatched_printed[0][2] == 584550
    assert reading.placed_at == (4, None)


def test_don_residue_transcription():
    assert set(reference.published_don_residues()) == {0, 1, 2}


def test_quotient_euler_starts():
    assert reference.published_quotient_euler(4)[:2] == [0, 1]


def test_verify_tables_suite():
    results = verify.suite_tables()
    statuses = {r.name: r.status for r in results}
    assert [r.name for r in results if r.status == verify.MISPRINT] == ["level-N table row 5"]
    assert not any(r.failed for r in results), [r.lines() for r in results if r.failed]
    assert statuses["level-N table row 4"] == verify.OK


def test_misprint_needs_both_identities():
    # a row that differs but still passes both identities is a plain failure
    res = verify.CheckResult("x", verify.FAIL)
    assert res.failed and res.lines() == ["FAIL     x"]
