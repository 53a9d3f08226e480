"""End-to-end CLI checks: exit codes, output formats, file output."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "glq.cli"]


def run(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=True)


def test_verify_symbolic_text():
    r = run("verify", "--n", "2", "--mode", "symbolic", "--format", "text")
    assert r.returncode == 0
    assert "[PASS]" in r.stdout
    assert "[FAIL]" not in r.stdout


def test_verify_symbolic_json():
    r = run("verify", "--n", "2", "--mode", "symbolic", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["pass"] is True
    assert doc["suite"] == "verify-symbolic"
    assert all(c["pass"] for c in doc["checks"])


def test_verify_numeric_single_word():
    r = run("verify", "--n", "3", "--mode", "numeric", "--word", "212",
            "--dim", "5", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["pass"] is True


def test_verify_braid():
    r = run("verify", "--mode", "braid", "--dim", "5", "--samples", "10",
            "--seed", "3", "--format", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["pass"] is True


@pytest.mark.parametrize("mode", ["upper", "full", "folded"])
def test_embed_modes(mode):
    r = run("embed", "--n", "3", "--mode", mode, "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["pass"] is True


def test_classical_subcommand():
    r = run("classical", "--n", "2", "--samples", "10", "--seed", "1",
            "--format", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["pass"] is True


def test_out_file(tmp_path):
    out = tmp_path / "report.json"
    r = run("verify", "--n", "2", "--mode", "symbolic", "--format", "json",
            "--out", str(out))
    assert r.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["pass"] is True


def test_usage_error_exit_code():
    r = run("verify", "--mode", "nonsense")
    assert r.returncode == 2
    r = run("frobnicate")
    assert r.returncode == 2


def test_bad_word_is_an_error():
    r = run("verify", "--n", "3", "--mode", "numeric", "--word", "112",
            "--dim", "5")
    assert r.returncode == 2
