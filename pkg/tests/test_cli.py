"""Tests for the command line front end."""

import json
import subprocess
import sys

import pytest

from radchar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--format", "json", "--no-timing")
    return code, json.loads(out)


def test_census_extraspecial_json(capsys):
    code, record = run_json(capsys, "census", "--type", "C", "--n", "2", "--d", "1", "--q", "3")
    assert code == 0
    assert record["params"] == {"type": "C", "n": 2, "d": 1, "q": 3}
    assert [(r["e"], r["count_at_q"]) for r in record["rows"]] == [(0, 9), (1, 2)]
    assert record["sum_of_squares_ok"] is True


def test_census_abelian_single_row(capsys):
    code, record = run_json(capsys, "census", "--type", "C", "--n", "2", "--d", "2")
    assert code == 0
    assert len(record["rows"]) == 1
    assert record["rows"][0]["e"] == 0
    assert record["rows"][0]["count"] == ["0", "0", "0", "1"]


def test_census_printed_oracle_mismatch(capsys):
    code, record = run_json(
        capsys,
        "census", "--type", "U", "--n", "2", "--d", "1",
        "--variant", "printed", "--q", "3", "--oracle",
    )
    assert code == 1
    assert record["sum_of_squares_ok"] is False
    assert record["oracle"]["match"] is False
    assert record["oracle"]["class_count"] == 83


def test_census_corrected_oracle_match(capsys):
    code, record = run_json(
        capsys,
        "census", "--type", "U", "--n", "2", "--d", "1", "--q", "3", "--oracle",
    )
    assert code == 0
    oracle = record["oracle"]
    assert oracle["match"] is True
    assert oracle["rows_match"] is True
    assert oracle["class_count_match"] is True


def test_census_oracle_requires_q(capsys):
    code, _, err = run_cli(capsys, "census", "--type", "C", "--n", "2", "--d", "1", "--oracle")
    assert code == 2
    assert "--oracle requires --q" in err


def test_census_rejects_even_q(capsys):
    code, _, err = run_cli(capsys, "census", "--type", "C", "--n", "2", "--d", "1", "--q", "2")
    assert code == 2
    assert "odd prime power required" in err


def test_census_rejects_bad_d(capsys):
    code, _, err = run_cli(capsys, "census", "--type", "U", "--n", "2", "--d", "2")
    assert code == 2
    assert err.startswith("error:")


def test_census_oracle_budget_refusal(capsys):
    code, _, err = run_cli(
        capsys, "census", "--type", "D", "--n", "4", "--d", "2", "--q", "3", "--oracle"
    )
    assert code == 2
    assert "19683" in err and "budget" in err


def test_budget_ceiling_enforced(capsys):
    code, _, err = run_cli(
        capsys,
        "census", "--type", "C", "--n", "2", "--d", "1", "--q", "3",
        "--oracle", "--budget", str(10 ** 9),
    )
    assert code == 2
    assert "ceiling" in err


def test_census_csv_column_order(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--type", "C", "--n", "3", "--d", "2", "--q", "3",
        "--format", "csv", "--no-timing",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "type,n,d,r,e,degree,count_poly,count_at_q"
    assert lines[1] == "C,3,2,0,0,1,q^4,81"
    assert lines[3] == "C,3,2,2,2,q^2,q^3 - q^2,18"


def test_census_qminus1_basis_rendering(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--type", "C", "--n", "2", "--d", "1",
        "--basis", "qminus1", "--format", "csv", "--no-timing",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[1].endswith("1 + 2*(q-1) + (q-1)^2,")
    assert lines[2].endswith("(q-1),")


def test_json_is_byte_identical_without_timing(capsys):
    args = ("verify", "--suite", "positivity", "--max-n", "4")
    _, first = run_json(capsys, *args)
    code, out, _ = run_cli(capsys, *args, "--format", "json", "--no-timing")
    assert code == 0
    assert json.loads(out) == first
    _, out2, _ = run_cli(capsys, *args, "--format", "json", "--no-timing")
    assert out == out2


def test_json_timing_field_toggle(capsys):
    code, out, _ = run_cli(capsys, "census", "--type", "C", "--n", "2", "--d", "2", "--format", "json")
    assert code == 0
    assert "timing_seconds" in json.loads(out)
    code, out, _ = run_cli(
        capsys, "census", "--type", "C", "--n", "2", "--d", "2", "--format", "json", "--no-timing"
    )
    assert "timing_seconds" not in json.loads(out)


def test_ranks_sym_brute(capsys):
    code, record = run_json(capsys, "ranks", "--class", "sym", "--n", "2", "--q", "3", "--brute")
    assert code == 0
    assert record["brute"]["histogram"] == {"0": 1, "1": 8, "2": 18}
    assert record["brute"]["match"] is True


def test_ranks_skew_odd_rank_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "ranks", "--class", "skew", "--n", "2", "--r", "1")
    assert code == 2
    assert "skew-symmetric rank must be even" in err


def test_ranks_herm_flags_printed_variant(capsys):
    code, record = run_json(capsys, "ranks", "--class", "herm", "--n", "1", "--q", "3", "--brute")
    assert code == 0
    assert record["brute"]["match"] is True
    assert record["brute"]["printed_matches"] is False


def test_ranks_skew_lists_even_ranks_only(capsys):
    code, record = run_json(capsys, "ranks", "--class", "skew", "--n", "4")
    assert code == 0
    assert [row["r"] for row in record["rows"]] == [0, 2, 4]


def test_verify_rejects_q_two(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "ranks", "--q", "2")
    assert code == 2
    assert "odd prime power required" in err


def test_verify_orbits_default_instances(capsys):
    code, record = run_json(capsys, "verify", "--suite", "orbits")
    assert code == 0
    assert record["ok"] is True
    names = [c["name"] for c in record["checks"]]
    assert names == sorted(names)
    assert "D n=4 d=2 q=3" in names
    assert "C n=2 d=1 q=5" in names
    assert len(names) == 7


def test_verify_classes_suite(capsys):
    code, record = run_json(capsys, "verify", "--suite", "classes")
    assert code == 0
    assert record["failures"] == []
    assert len(record["checks"]) == 7


def test_verify_pairings_and_positivity(capsys):
    code, record = run_json(capsys, "verify", "--suite", "pairings", "--max-n", "3")
    assert code == 0 and record["ok"] is True
    code, record = run_json(capsys, "verify", "--suite", "positivity", "--max-n", "6")
    assert code == 0 and record["ok"] is True


def test_verify_md_has_per_check_lines(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "ranks", "--max-n", "2", "--no-timing")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    assert len(lines) >= 6
    assert all("[ranks]" in l for l in lines)


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "radchar.cli", "census", "--type", "C", "--n", "2", "--d", "1",
         "--q", "3", "--format", "json", "--no-timing"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    record = json.loads(proc.stdout)
    assert [r["count_at_q"] for r in record["rows"]] == [9, 2]


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
