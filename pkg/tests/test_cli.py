import json
import subprocess
import sys

import pytest

from borelschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reptype_text(capsys):
    code, out, _ = run(capsys, "reptype", "--n", "2", "--r", "4", "--char", "3")
    assert code == 0 and out == "Finite (case d)\n"


def test_socle_tsv(capsys):
    code, out, _ = run(capsys, "socle", "--n", "2", "--r", "4", "--char", "2")
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert code == 0
    assert [r[0] for r in rows if r[1] != "0"] == ["4,0", "3,1"]


def test_arseq_json(capsys):
    code, out, _ = run(capsys, "arseq", "--n", "2", "--r", "2", "--char", "0", "--lambda", "1,1")
    d = json.loads(out)
    assert code == 0
    assert d["dimU"] == 1 and d["dimE"] == 2
    assert d["verified"]["passed"] and d["verified"]["exact"] and d["verified"]["nonsplit"]


def test_mult_and_basis(capsys):
    code, out, _ = run(capsys, "mult", "--n", "2", "--r", "2", "--x", "1,1:1,2", "--y", "1,2:2,2")
    d = json.loads(out)
    assert d["product"] == [{"coeff": "2", "element": {"i": [1, 1], "j": [2, 2]}}]
    code, out, _ = run(capsys, "mult", "--n", "2", "--r", "2", "--char", "2",
                       "--x", "1,1:1,2", "--y", "1,2:2,2")
    assert json.loads(out)["product"] == []
    code, out, _ = run(capsys, "basis", "--n", "3", "--r", "2")
    assert json.loads(out)["dim"] == 21


def test_quiver_outputs(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "2", "--r", "3", "--char", "2", "--format", "dot")
    assert code == 0 and '"3" -> "1" [label="b1"];' in out
    code, out, _ = run(capsys, "quiver", "--n", "2", "--r", "3", "--char", "2")
    assert len(json.loads(out)["relations"]) == 3


def test_verify_ar_and_truncate(capsys):
    code, out, _ = run(capsys, "verify-ar", "--n", "2", "--r", "3", "--char", "2")
    assert code == 0 and json.loads(out)["all_passed"]
    code, out, _ = run(capsys, "truncate", "--n", "3", "--r", "3", "--char", "3",
                       "--sub-n", "2", "--lambda", "1,2,0")
    d = json.loads(out)
    assert code == 0 and d["dim"] == 10
    assert d["ar_translate"]["G_tau_small_iso_tau_big"] is False


def test_pushdown_and_crosscheck(capsys):
    code, out, _ = run(capsys, "pushdown", "--cover", "cover253")
    assert code == 0 and json.loads(out)["passed"]
    code, out, err = run(capsys, "crosscheck", "--quick", "--only", "2,8")
    assert code == 0
    assert "criterion  2" in err and json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [
    ("reptype", "--n", "2", "--r", "4", "--char", "4"),
    ("arseq", "--n", "2", "--r", "2", "--lambda", "2,1"),
    ("arseq", "--n", "2", "--r", "2", "--lambda", "2,0"),
    ("arseq", "--n", "2", "--r", "2"),
    ("mult", "--n", "2", "--r", "2", "--x", "1,2:2,1", "--y", "1,2:2,2"),
    ("truncate", "--n", "3", "--r", "3", "--weights", "0,0,3"),
    ("pushdown", "--cover", "nope"),
    ("crosscheck", "--only", "12"),
    ("frobnicate",),
    ("socle", "--n", "2"),
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        raise SystemExit(main(list(argv)))
    assert e.value.code == 4


def test_budget_exit(capsys):
    code, _, err = run(capsys, "basis", "--n", "3", "--r", "6", "--budget", "100")
    assert code == 3 and "budget" in err


def test_run_directory(tmp_path, capsys):
    code, out, _ = run(capsys, "socle", "--n", "2", "--r", "3", "--char", "3", "--out", str(tmp_path))
    man = json.loads((tmp_path / "manifest.json").read_text())
    assert man["files"] == ["socle.tsv"]
    assert (tmp_path / "socle.tsv").read_text() == out


def test_output_is_deterministic(capsys):
    argv = ("verify-ar", "--n", "3", "--r", "2", "--char", "2")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "borelschur.cli", "reptype", "--n", "3", "--r", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "Finite (A_n linear orientation)\n"
