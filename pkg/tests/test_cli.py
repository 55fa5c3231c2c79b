import json
import os
import subprocess
import sys
from pathlib import Path

import pytest


def run_cli(*args: str, env=None) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "symlap", *args]
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(cmd, capture_output=True, text=True, env=full_env)


def test_help_exits_cleanly():
    cp = run_cli("--help")
    assert cp.returncode == 0
    assert "forward" in cp.stdout and "verify" in cp.stdout


def test_forward_grid_rows_and_example1_value():
    cp = run_cli("forward", "--signal", "sign", "--x1", "1", "--x2", "1",
                 "--ymin", "-1", "--ymax", "1", "--steps", "2")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert lines[0] == "y,re,im,err"
    assert len(lines) == 1 + 3  # header + steps+1 rows
    y, re, im, err = map(float, lines[-1].split(","))
    assert y == 1.0
    assert abs(re - 0.0) <= 1e-8 and abs(im - (-1.0)) <= 1e-8
    assert err >= 0.0


def test_forward_single_point_asymmetric():
    cp = run_cli("forward", "--signal", "one", "--x1", "2", "--x2", "3",
                 "--y", "1")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert len(lines) == 2
    _, re, im, _ = map(float, lines[1].split(","))
    assert abs(re - 0.7) <= 1e-8 and abs(im - (-0.1)) <= 1e-8


def test_forward_divergence_exits_4():
    cp = run_cli("forward", "--signal", "sign", "--x1", "0", "--x2", "1",
                 "--y", "0")
    assert cp.returncode == 4
    assert "half-line" in cp.stderr
    assert cp.stdout == ""


def test_forward_unknown_signal_exits_2():
    cp = run_cli("forward", "--signal", "nosuch", "--x1", "1", "--x2", "1",
                 "--y", "0")
    assert cp.returncode == 2
    assert "nosuch" in cp.stderr and "sign" in cp.stderr


def test_forward_usage_error_exits_2():
    cp = run_cli("forward", "--signal", "sign", "--x1", "1", "--x2", "1")
    assert cp.returncode == 2


def test_invert_recovers_identity_signal():
    cp = run_cli("invert", "--expr", "1/s^2 - 1/cs^2",
                 "--tmin", "-3", "--tmax", "3", "--steps", "6")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert lines[0] == "t,re,im"
    assert len(lines) == 8
    for row in lines[1:]:
        t, re, im = map(float, row.split(","))
        assert abs(re - t) <= 1e-12
        assert abs(im) <= 1e-12


def test_invert_sign_expression():
    cp = run_cli("invert", "--expr", "1/s - 1/cs",
                 "--tmin", "-1", "--tmax", "1", "--steps", "2")
    assert cp.returncode == 0, cp.stderr
    rows = [r.split(",") for r in cp.stdout.strip().splitlines()[1:]]
    assert [float(r[1]) for r in rows] == [-1.0, 1.0, 1.0]


def test_invert_mixed_term_exits_3():
    cp = run_cli("invert", "--expr", "1/(s*cs)", "--t", "1")
    assert cp.returncode == 3
    assert "position" in cp.stderr


def test_invert_syntax_error_exits_3_with_position():
    cp = run_cli("invert", "--expr", "1/s + * 2", "--t", "1")
    assert cp.returncode == 3
    assert "position 6" in cp.stderr


def test_invert_improper_exits_5():
    cp = run_cli("invert", "--expr", "s + 1/cs", "--t", "1")
    assert cp.returncode == 5
    assert "proper" in cp.stderr


def test_invert_numeric_single_line():
    cp = run_cli("invert-numeric", "--expr", "1/s - 1/cs", "--x1", "1",
                 "--x2", "1", "--t", "1", "--A", "1000", "--tol", "1e-6")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert lines[0] == "t,re,im,a_sensitivity"
    t, re, im, sens = map(float, lines[1].split(","))
    assert t == 1.0
    assert abs(re - 1.0) <= 1e-2
    assert abs(im) <= 1e-6
    assert 0.0 <= sens <= 1e-2


def test_invert_numeric_midpoint():
    cp = run_cli("invert-numeric", "--expr", "1/s - 1/cs", "--x1", "1",
                 "--x2", "1", "--t", "0", "--A", "1000", "--tol", "1e-6")
    _, re, im, _ = map(float, cp.stdout.strip().splitlines()[1].split(","))
    assert abs(re) <= 5e-3


def test_out_flag_writes_file(tmp_path: Path):
    out = tmp_path / "grid.csv"
    cp = run_cli("forward", "--signal", "one", "--x1", "2", "--x2", "3",
                 "--y", "1", "--out", str(out))
    assert cp.returncode == 0
    assert out.read_text().startswith("y,re,im,err\n")


def test_verify_json_schema_and_exit_code():
    cp = run_cli("verify")
    assert cp.returncode == 0, cp.stderr
    doc = json.loads(cp.stdout)  # must be strict-parseable
    ids = [entry["id"] for entry in doc["criteria"]]
    assert "example1_grid" in ids
    assert len(ids) == 10
    for entry in doc["criteria"]:
        assert set(entry) == {"id", "status", "measured", "tolerance"}
        assert entry["status"] in ("pass", "fail")
    assert doc["all_pass"] is True


@pytest.mark.parametrize("args", [
    ("forward", "--signal", "sincos", "--freq", "2", "--x1", "1",
     "--x2", "1", "--ymin", "-2", "--ymax", "2", "--steps", "7"),
    ("invert", "--expr", "1/s + 1/cs", "--tmin", "-2", "--tmax", "2",
     "--steps", "5"),
    ("invert-numeric", "--expr", "1/s - 1/cs", "--x1", "1", "--x2", "1",
     "--t", "0.5", "--A", "500", "--tol", "1e-6"),
])
def test_byte_identical_across_runs_and_thread_counts(args):
    first = run_cli(*args, env={"OMP_NUM_THREADS": "1"})
    second = run_cli(*args, env={"OMP_NUM_THREADS": "4"})
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
