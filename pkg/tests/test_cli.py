import json
import subprocess
import sys

import pytest

from rootcount.cli import OutputRecord, genfun_record, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genfun_tsv(capsys):
    code, out, _ = run(capsys, "genfun", "--family", "gl", "--q", "3", "--m", "2", "--max-dim", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dim\tcount\tproportion"
    assert "2\t14\t7/24" in lines
    assert "1\t2\t1/1" in lines


def test_genfun_sp_rank_and_classes(capsys):
    code, out, _ = run(capsys, "genfun", "--family", "sp", "--q", "3", "--m", "4",
                       "--max-dim", "4", "--classes")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dim\trank\tclasses\tcount\tproportion"
    assert lines[1] == "2\t1\t3\t8\t1/3"
    assert len(lines) == 3


def test_genfun_json_round_trip(capsys):
    code, out, _ = run(capsys, "genfun", "--family", "u", "--q", "3", "--m", "8",
                       "--max-dim", "2", "--format", "json")
    assert code == 0
    rec = OutputRecord.from_json(out)
    assert rec.rows[1] == {"dim": "2", "count": "64", "proportion": "2/3"}
    assert OutputRecord.from_json(rec.to_json()) == rec


def test_big_integers_stay_exact():
    rec = genfun_record("gl", 41, 7, 6)
    count = int(rec.rows[-1]["count"])
    assert count > 2 ** 64
    num, den = map(int, rec.rows[-1]["proportion"].split("/"))
    assert den > 2 ** 53


def test_ortho_rows():
    rows = genfun_record("o-sum", 3, 2, 3).rows
    assert rows[1]["count"] is None and rows[1]["proportion"] == "7/4"
    assert rows[2]["count"] is not None
    diff = genfun_record("o-diff-ss", 3, 2, 4).rows
    assert [r["dim"] for r in diff] == ["2", "4"]
    assert diff[0]["proportion"] == "1/4"


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "sp", "--dim", "2", "--q", "3", "--m", "4",
                       "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert row["order"] == "24" and row["count"] == "8" and row["proportion"] == "1/3"


def test_oracle_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("ROOTCOUNT_BUDGET", "100")
    code, _, err = run(capsys, "oracle", "--family", "gl", "--dim", "3", "--q", "3", "--m", "2")
    assert code == 2
    assert "budget" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--family", "sp", "--q", "3", "--m", "4", "--max-dim", "2")
    assert code == 0
    assert "2\t8\t8\t8\tPASS" in out.splitlines()


def test_verify_ortho_alias(capsys):
    code, out, _ = run(capsys, "verify", "--family", "o", "--q", "3", "--m", "2", "--max-dim", "3")
    assert code == 0
    assert out.count("PASS") == 3


def test_verify_all_skipped(capsys, monkeypatch):
    monkeypatch.setenv("ROOTCOUNT_BUDGET", "2")
    code, out, _ = run(capsys, "verify", "--family", "gl", "--q", "3", "--m", "2", "--max-dim", "2")
    assert code == 2
    assert "SKIP" in out


def test_divisors_table(capsys):
    code, out, _ = run(capsys, "divisors", "--family", "u", "--q", "3", "--m", "8")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[-1].split("\t") == ["8", "2", "4", "paired", "2", "1", "2", "9"]


@pytest.mark.parametrize("argv", [
    ["genfun", "--family", "gl", "--q", "4", "--m", "2", "--max-dim", "2"],
    ["genfun", "--family", "gl", "--q", "3", "--m", "6", "--max-dim", "2", "--classes"],
    ["genfun", "--family", "o-sum", "--q", "3", "--m", "2", "--max-dim", "2", "--classes"],
    ["genfun", "--family", "gl", "--q", "3", "--m", "0", "--max-dim", "2"],
])
def test_bad_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rootcount", "divisors", "--family", "gl",
                          "--q", "3", "--m", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0].startswith("d\te")
