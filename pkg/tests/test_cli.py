"""Command-line interface: subcommands, exit codes, configuration."""

import json
import pathlib
import shutil
import subprocess

import pytest

from splitoct.cli import main
from splitoct.verify import CheckResult, SuiteResult

DATA = pathlib.Path(__file__).parent / "data"

ENV_VARS = ("OCT_FIELD", "OCT_THREADS", "OCT_MAX_SUBSPACES", "OCT_GROUP_CAP")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)


def test_lattice_dot_matches_golden(capsys):
    assert main(["lattice", "--field", "2", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out == (DATA / "lattice_f2.dot").read_text()


def test_lattice_json(capsys):
    assert main(["lattice", "--format", "json"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert len(parsed["nodes"]) == 21
    assert len(parsed["edges"]) == 40


def test_classify_prints_label(capsys):
    rc = main(["classify", "--basis", "[[0,1,0,0,0,0,0,0]]"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "Fn"
    rc = main(["classify", "--field", "3",
               "--basis", "[[1,0,0,1,0,0,0,0],[1,0,0,2,0,0,0,0]]"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "S"


def test_classify_rejects_open_space(capsys):
    rc = main(["classify", "--basis",
               "[[0,1,0,0,0,0,0,0],[0,0,1,0,0,0,0,0]]"])
    assert rc == 2
    assert "not closed" in capsys.readouterr().err


@pytest.mark.parametrize("basis", ["not json", "[[1,2,3]]", "[]", "[1,2]"])
def test_classify_rejects_bad_basis(basis, capsys):
    assert main(["classify", "--basis", basis]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_enumerate_to_file(tmp_path, capsys):
    out = tmp_path / "records.jsonl"
    rc = main(["enumerate", "--dims", "5,6,8", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 127
    label_counts = {}
    for line in lines:
        d = json.loads(line)
        label_counts[d["label"]] = label_counts.get(d["label"], 0) + 1
    assert label_counts == {"nO+On": 63, "Qperp": 63, "O": 1}


def test_enumerate_stdout_deterministic(capsys):
    assert main(["enumerate", "--dims", "8"]) == 0
    first = capsys.readouterr().out
    assert main(["enumerate", "--dims", "8"]) == 0
    assert capsys.readouterr().out == first


def test_enumerate_budget_exit_code(capsys):
    rc = main(["enumerate", "--field", "3", "--max-subspaces", "1000"])
    assert rc == 2
    assert "resource limit" in capsys.readouterr().err


def test_enumerate_bad_dims(capsys):
    assert main(["enumerate", "--dims", "9"]) == 2
    assert main(["enumerate", "--dims", "a,b"]) == 2
    capsys.readouterr()


def test_bad_field_rejected(capsys):
    assert main(["lattice", "--field", "4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_identities_pass(capsys):
    rc = main(["verify", "--suite", "identities", "--field", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "suite identities (field 2): PASS" in out
    assert "[ok]" in out


def test_verify_field_restriction(capsys):
    # the exhaustive geometry suite only exists over F_2
    rc = main(["verify", "--suite", "singular", "--field", "3"])
    assert rc == 2
    capsys.readouterr()


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_failure_exit_code(monkeypatch, capsys):
    failing = SuiteResult(
        suite="identities", field=2,
        checks=[CheckResult(name="demo check", passed=False, checked=7,
                            counterexample="x=(0,...,0)")],
        elapsed=0.0)
    monkeypatch.setattr("splitoct.verify.run_suite",
                        lambda *a, **k: [failing])
    rc = main(["verify", "--suite", "identities", "--field", "2"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "FIRST COUNTEREXAMPLE" in out
    assert "x=(0,...,0)" in out


def test_orbits_restricted_dims(capsys):
    rc = main(["orbits", "--dims", "5,6"])
    assert rc == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert rows == [
        {"dim": 5, "label": "nO+On", "orbit_count": 1, "orbit_sizes": [63]},
        {"dim": 6, "label": "Qperp", "orbit_count": 1, "orbit_sizes": [63]},
    ]


def test_orbits_group_cap(capsys):
    rc = main(["orbits", "--dims", "6", "--group-cap", "100"])
    assert rc == 2
    assert "resource limit" in capsys.readouterr().err


def test_env_configuration(monkeypatch, capsys):
    monkeypatch.setenv("OCT_FIELD", "3")
    assert main(["lattice"]) == 0
    assert "lattice_f3" in capsys.readouterr().out
    # explicit flag wins over the environment
    assert main(["lattice", "--field", "2"]) == 0
    assert "lattice_f2" in capsys.readouterr().out
    monkeypatch.setenv("OCT_MAX_SUBSPACES", "1000")
    assert main(["enumerate", "--field", "3"]) == 2
    capsys.readouterr()


def test_console_script_installed():
    exe = shutil.which("splitoct")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "classify", "--basis", "[[0,1,0,0,0,0,0,0]]"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "Fn"
