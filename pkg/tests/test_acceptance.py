"""Acceptance suite: one test per verification criterion.

Each test prints a PASS/FAIL line with the measured value and its
tolerance; `symlap verify` runs the same checks from the command line.
"""

import os
import subprocess
import sys

import pytest

from symlap import verify


def _run(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.id}: measured {result.measured:.3e} vs "
          f"tolerance {result.tolerance:.3e} ({result.worst_part})")
    assert result.passed, (
        f"{result.id}: {result.worst_part} measured {result.measured} "
        f"exceeds {result.tolerance}")


def test_c01_example1_grid():
    _run(verify.criterion_example1_grid)


def test_c02_examples_2_3_grid():
    _run(verify.criterion_examples_2_3_grid)


def test_c03_reductions():
    _run(verify.criterion_reductions)


def test_c04_kernel_witness():
    _run(verify.criterion_kernel_witness)


def test_c05_split_inversion():
    _run(verify.criterion_split_inversion)


def test_c06_numeric_inversion():
    _run(verify.criterion_numeric_inversion)


def test_c07_derivative_rules():
    _run(verify.criterion_derivative_rules)


def test_c08_heat_application():
    _run(verify.criterion_heat_application)


def test_c09_ode_application():
    _run(verify.criterion_ode_application)


def test_c10_determinism():
    _run(verify.criterion_determinism)


@pytest.mark.parametrize("threads", ["1", "4"])
def test_c10_verify_command_is_byte_identical_across_runs(threads):
    env = dict(os.environ, OMP_NUM_THREADS=threads)
    cmd = [sys.executable, "-m", "symlap", "verify"]
    first = subprocess.run(cmd, capture_output=True, text=True, env=env)
    second = subprocess.run(cmd, capture_output=True, text=True, env=env)
    assert first.returncode == 0, first.stderr
    assert first.returncode == second.returncode
    assert first.stdout == second.stdout


def test_report_is_stable_json():
    text = verify.report_json()
    assert text == verify.report_json()
