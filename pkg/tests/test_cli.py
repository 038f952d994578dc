"""CLI behaviour; reports and SVGs are compared byte-for-byte with tests/golden/.

Regenerate the golden files with ``pytest tests/test_cli.py --regen-golden``.
"""
import json
import subprocess
import sys
from pathlib import Path

import pytest

from extremal import io
from extremal.cli import main

TESTS = Path(__file__).parent
GOLDEN = TESTS / "golden"

CASES = {
    "solve-mice-square.json": ["solve-mice", "--in", "data/square.json"],
    "solve-mice-complex.json": ["solve-mice", "--in", "data/complex_cloud.json", "--eps", "1e-9"],
    "solve-mice-probe.json": ["solve-mice", "--in", "data/cube3.json", "--restarts", "3", "--eps", "1e-9", "--seed", "4"],
    "solve-maie-rectangle.json": ["solve-maie", "--in", "data/rectangle.json"],
    "solve-maie-complex-probe.json": ["solve-maie", "--in", "data/rectangle.json", "--complex", "--restarts", "3", "--seed", "1"],
    "solve-centered-cloud.json": ["solve-centered", "--in", "data/complex_cloud.json", "--m", "16"],
    "solve-centered-rectangle.json": ["solve-centered", "--in", "data/rectangle.json", "--complex"],
    "verify-e4.json": ["verify", "e4-containment", "--trials", "3", "--seed", "2"],
    "plot-square.svg": ["plot", "--in", "data/square.json"],
    "plot-rectangle-complex.svg": ["plot", "--in", "data/rectangle.json", "--complex"],
    "plot-cube3.svg": ["plot", "--in", "data/cube3.json", "--project", "0", "2"],
    "plot-ellipse.svg": ["plot", "--in", "data/ellipse.json"],
    "plot-square-bare.svg": ["plot", "--in", "data/square.json", "--bare"],
}


@pytest.fixture
def in_tests(monkeypatch):
    monkeypatch.chdir(TESTS)
    monkeypatch.delenv(io.SEED_ENV, raising=False)


@pytest.mark.parametrize("golden", sorted(CASES))
def test_golden(golden, in_tests, capsys, regen_golden):
    assert main(CASES[golden]) == 0
    out = capsys.readouterr().out
    path = GOLDEN / golden
    if regen_golden:
        path.write_text(out)
    assert path.exists(), f"missing golden file {golden}; run with --regen-golden"
    assert out == path.read_text()


def test_report_content(in_tests, capsys):
    main(CASES["solve-mice-square.json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "extremal-run-report" and doc["exit_status"] == 0
    (E,) = doc["ellipsoids"]
    assert E["semi_axes"] == pytest.approx([2 ** 0.5] * 2, rel=1e-6)
    main(CASES["solve-maie-complex-probe.json"])
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["ellipsoids"]) == 3 and doc["probe"]["restarts"] == 3


def test_out_file_and_seed_env(in_tests, tmp_path, capsys, monkeypatch):
    out = tmp_path / "r.json"
    assert main(["solve-maie", "--in", "data/rectangle.json", "--seed", "7", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    a = json.loads(out.read_text())
    monkeypatch.setenv(io.SEED_ENV, "7")
    assert main(["solve-maie", "--in", "data/rectangle.json", "--out", str(out)]) == 0
    b = json.loads(out.read_text())
    assert a["seed"] == b["seed"] == 7 and a["ellipsoids"] == b["ellipsoids"]


@pytest.mark.parametrize("argv,status,msg", [
    ([], 2, "missing subcommand"),
    (["frobnicate"], 2, "invalid choice"),
    (["solve-mice"], 2, "--in"),
    (["solve-mice", "--in", "data/nope.json"], 2, "cannot read"),
    (["solve-mice", "--in", "data/ellipse.json"], 2, "points or polytope"),
    (["solve-mice", "--in", "data/square.json", "--eps", "2"], 2, "--eps"),
    (["solve-mice", "--in", "data/square.json", "--restarts", "0"], 2, "--restarts"),
    (["solve-maie", "--in", "data/cube3.json", "--complex"], 2, "even"),
    (["plot", "--in", "data/cube3.json"], 2, "projection"),
    (["plot", "--in", "data/square.json", "--project", "0", "5"], 2, "invalid"),
    (["verify", "nope"], 2, "unknown suite"),
    (["verify", "e4-containment", "--trials", "0"], 2, "--trials"),
])
def test_errors_are_one_line(argv, status, msg, in_tests, capsys):
    assert main(argv) == status
    err = capsys.readouterr().err
    assert err.startswith("extremal: error:") and msg in err
    assert err.count("\n") == 1


def test_verify_failure_exit_status(in_tests, capsys, monkeypatch):
    from extremal.theorems import suites, VerificationReport
    monkeypatch.setitem(suites.SUITES, "volume-lemma",
                        lambda trials=1, seed=0: VerificationReport("volume-lemma", 1, 1.0, 0.0, seed))
    assert main(["verify", "volume-lemma"]) == 1
    captured = capsys.readouterr()
    assert json.loads(captured.out)["exit_status"] == 1
    assert "FAIL volume-lemma" in captured.err


def test_convergence_error_exit_status(in_tests, capsys, monkeypatch):
    from extremal import cli
    from extremal.errors import ConvergenceError

    def boom(*a, **k):
        raise ConvergenceError("mice: gap too large", None)
    monkeypatch.setattr(cli, "mice", boom)
    assert main(["solve-mice", "--in", "data/square.json"]) == 1
    assert "gap too large" in capsys.readouterr().err


def test_module_entry_point(in_tests):
    r = subprocess.run([sys.executable, "-m", "extremal", "solve-mice", "--in", "data/square.json"],
                       capture_output=True, text=True, cwd=TESTS)
    assert r.returncode == 0
    assert r.stdout == (GOLDEN / "solve-mice-square.json").read_text()
