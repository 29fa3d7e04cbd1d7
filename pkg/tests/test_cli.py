import json
import subprocess
import sys

import pytest

from qschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "1", "--n", "1", "--k", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["entries"] == [
        {"lambda": [3], "mult": 1, "dim": 2},
        {"lambda": [2, 1], "mult": 2, "dim": 2},
        {"lambda": [1, 1, 1], "mult": 1, "dim": 2},
    ]
    assert data["total"] == 8


def test_output_is_deterministic(capsys):
    first = run(capsys, "decompose", "--m", "2", "--n", "1", "--k", "3", "--format", "json")
    second = run(capsys, "decompose", "--m", "2", "--n", "1", "--k", "3", "--format", "json")
    assert first == second


def test_hwv(capsys):
    code, out, _ = run(capsys, "hwv", "--m", "1", "--n", "1", "--k", "2", "--tableau", "1/2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["weight"] == [1, 1]
    assert all(data["checks"].values())
    terms = {tuple(t["tuple"]): t for t in data["vector"]}
    assert set(terms) == {(1, 2), (2, 1)}
    code, out, _ = run(capsys, "hwv", "--m", "1", "--n", "1", "--tableau", "1/2")
    assert "1⊗1~" in out and "pass" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2", "--n", "2", "--k", "3")
    assert code == 0
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--m", "1", "--n", "1", "--k", "2", "--format", "json")
    assert json.loads(out)["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qschur import cli
    from qschur.decompose import Report

    bad = Report("broken")
    bad.add("always fails", False)
    monkeypatch.setattr(cli, "run_all", lambda *a: [bad])
    code, out, _ = run(capsys, "verify", "--m", "1", "--n", "1", "--k", "2")
    assert code == 1
    assert "FAIL" in out


def test_hecke_eval(capsys):
    code, out, _ = run(capsys, "hecke-eval", "--k", "2", "h1", "h1")
    assert code == 0
    assert out.strip() == "(q^2) * T[1,2] + (q^2 - 1) * T[2,1]"
    code, out, _ = run(capsys, "hecke-eval", "T[2,1]", "--format", "json")
    assert json.loads(out)["result"] == [{"perm": [2, 1], "num": [[0, "1"]], "den": [[0, "1"]]}]


@pytest.mark.parametrize("argv, fragment", [
    (["hwv", "--m", "1", "--n", "1", "--tableau", "1,x/2"], "position 2"),
    (["hwv", "--m", "1", "--n", "1", "--tableau", "1,2/3,4"], "hook"),
    (["hwv", "--m", "1", "--n", "1", "--k", "3", "--tableau", "1/2"], "does not match"),
    (["hecke-eval", "T[2,1] + ?"], "position"),
    (["decompose", "--m", "2", "--n", "2", "--k", "7"], "bound"),
])
def test_invalid_input(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--m", "0", "--n", "1", "--k", "2"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qschur", "decompose", "--m", "1", "--n", "1", "--k", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "total = 4" in proc.stdout
