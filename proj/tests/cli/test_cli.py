"""End-to-end checks of the wriggle command-line tool.

The binary under test comes from the WRIGGLE_BIN environment variable, which
the build sets when registering this suite with ctest.
"""

import json
import os
import subprocess

import pytest

BIN = os.environ["WRIGGLE_BIN"]

TREFOIL = "tangle\nclosed : O1+ O2+ U1+ U2+\n"
LONG_TREFOIL = "tangle\nlong start=T.1 end=B.1 : O1+ O2+ U1+ U2+\n"
CLASSICAL_TREFOIL = "tangle\nclosed : O1+ U2+ O3+ U1+ O2+ U3+\n"
SINGULAR_TREFOIL = "tangle\nclosed : O1+ P2* U1+ Q2*\n"
VIRTUAL_HOPF = "tangle\nclosed : O1+\nclosed : U1+\n"
ASYMMETRIC = "tangle\nclosed : O1+ O2+ U1+ U3+ U2+ O3+\n"


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)


def tangle_file(tmp_path, text, name="input.tangle"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_validate_reports_counts(tmp_path):
    result = run("validate", tangle_file(tmp_path, TREFOIL))
    assert result.returncode == 0
    assert result.stdout == "ok components=1 crossings=2\n"


def test_validate_counts_singular_crossings():
    result = run("validate", "-", stdin=SINGULAR_TREFOIL)
    assert result.returncode == 0
    assert result.stdout == "ok components=1 crossings=1 singular=1\n"


def test_validate_prints_violations_and_fails(tmp_path):
    bad = tangle_file(tmp_path, "tangle\nlong start=T.1 end=B.1 : O1+ U1-\n")
    result = run("validate", bad)
    assert result.returncode == 1
    lines = result.stdout.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("SignInconsistency")


def test_validate_missing_file_is_a_usage_error():
    result = run("validate", "/nonexistent/path.tangle")
    assert result.returncode == 2
    assert "cannot read" in result.stderr


def test_syntax_errors_exit_two():
    result = run("validate", "-", stdin="tangle\nclosed O1+\n")
    assert result.returncode == 2
    assert "syntax error at line 2, column 8" in result.stderr


def test_invariant_selfwriggle_text():
    assert run("invariant", "-", stdin=TREFOIL).stdout == "t1 + t1^-1 - 2\n"
    assert run("invariant", "-", stdin=CLASSICAL_TREFOIL).stdout == "0\n"
    assert run("invariant", "-", "--which", "selfwriggle", stdin=LONG_TREFOIL).stdout == \
        "t1 + t1^-1 - 2\n"


def test_invariant_selfwriggle_json():
    result = run("invariant", "-", "--format", "json", stdin=TREFOIL)
    assert result.returncode == 0
    assert json.loads(result.stdout) == [
        {"coeff": 1, "exps": {"1": 1}},
        {"coeff": 1, "exps": {"1": -1}},
        {"coeff": -2, "exps": {}},
    ]


def test_invariant_writhe_vlk_wriggle():
    assert run("invariant", "-", "--which", "writhe", stdin=TREFOIL).stdout == "2\n"
    assert run("invariant", "-", "--which", "vlk", "-a", "0", "-b", "1",
               stdin=VIRTUAL_HOPF).stdout == "1\n"
    assert run("invariant", "-", "--which", "vlk", "-a", "1", "-b", "0",
               stdin=VIRTUAL_HOPF).stdout == "0\n"
    assert run("invariant", "-", "--which", "wriggle", "-a", "0", "-b", "1",
               stdin=VIRTUAL_HOPF).stdout == "1\n"


def test_invariant_flag_validation():
    assert run("invariant", "-", "--which", "mystery", stdin=TREFOIL).returncode == 2
    assert run("invariant", "-", "--which", "vlk", stdin=VIRTUAL_HOPF).returncode == 2
    assert run("invariant", "-", "--format", "yaml", stdin=TREFOIL).returncode == 2
    out_of_range = run("invariant", "-", "--which", "vlk", "-a", "0", "-b", "7",
                       stdin=VIRTUAL_HOPF)
    assert out_of_range.returncode == 1


def test_scramble_echoes_canonically_with_zero_moves():
    result = run("scramble", "-", "--moves", "0", stdin="tangle\nclosed : O7+ O9+ U7+ U9+\n")
    assert result.stdout == TREFOIL


def test_scramble_is_deterministic_and_invariant():
    first = run("scramble", "-", "--moves", "20", "--seed", "42", stdin=TREFOIL)
    second = run("scramble", "-", "--moves", "20", "--seed", "42", stdin=TREFOIL)
    assert first.stdout == second.stdout
    assert first.returncode == 0
    poly = run("invariant", "-", stdin=first.stdout)
    assert poly.stdout == "t1 + t1^-1 - 2\n"


def test_vassiliev_extension():
    assert run("vassiliev", "-", stdin=SINGULAR_TREFOIL).stdout == "t1 + t1^-1 - 2\n"
    assert run("vassiliev", "-", stdin="tangle\nclosed : P1* P2* Q1* Q2*\n").stdout == "0\n"
    # A classical file is accepted; its extension is the plain polynomial.
    assert run("vassiliev", "-", stdin=TREFOIL).stdout == "t1 + t1^-1 - 2\n"


def test_witness_search_lists_witnesses_and_target_verdict():
    result = run("witness-search", "--bound", "1", "--target", "t1^2 - 1")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[-1].startswith("target t1^2 - 1: not attained")
    witness_lines = lines[:-1]
    assert len(witness_lines) == 4
    for line in witness_lines:
        assert " => " in line
        assert line.endswith("t1 + t1^-1 - 2")
    assert run("witness-search", "--bound", "1", "--target", "t1^2 - 1").stdout == result.stdout


def test_witness_search_seeded_sampling_is_deterministic():
    args = ("witness-search", "--bound", "2", "--seed", "7", "--samples", "200")
    assert run(*args).stdout == run(*args).stdout


def test_connect_reports_sigma_and_adds_polynomials(tmp_path):
    top = tangle_file(tmp_path, LONG_TREFOIL, "top.tangle")
    bottom = tangle_file(tmp_path, LONG_TREFOIL, "bottom.tangle")
    result = run("connect", top, bottom)
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "# sigma: 0:0"
    assert lines[1] == "tangle"
    poly = run("invariant", "-", stdin=result.stdout)
    assert poly.stdout == "2t1 + 2t1^-1 - 4\n"


def test_connect_boundary_mismatch_is_a_domain_error(tmp_path):
    top = tangle_file(tmp_path, LONG_TREFOIL, "top.tangle")
    bottom = tangle_file(tmp_path, TREFOIL, "bottom.tangle")
    result = run("connect", top, bottom)
    assert result.returncode == 1


def test_reverse_inverts_the_variable():
    reversed_out = run("reverse", "-", "--component", "0", stdin=ASYMMETRIC)
    assert reversed_out.returncode == 0
    assert run("invariant", "-", stdin=ASYMMETRIC).stdout == "2t1 + t1^-2 - 3\n"
    assert run("invariant", "-", stdin=reversed_out.stdout).stdout == "t1^2 + 2t1^-1 - 3\n"


def test_closure_preserves_the_polynomial():
    closed_out = run("closure", "-", stdin=LONG_TREFOIL)
    assert closed_out.returncode == 0
    assert closed_out.stdout == TREFOIL
    assert run("closure", "-", stdin=TREFOIL).returncode == 1


def test_random_is_deterministic_and_valid():
    args = ("random", "--closed", "1", "--long", "1", "--crossings", "5", "--seed", "9")
    first = run(*args)
    assert first.returncode == 0
    assert run(*args).stdout == first.stdout
    assert run("validate", "-", stdin=first.stdout).returncode == 0


def test_usage_errors_exit_two():
    assert run().returncode == 2
    assert run("frobnicate").returncode == 2
    assert run("scramble", "-", "--bogus", stdin=TREFOIL).returncode == 2


def test_singular_input_rejected_where_classical_is_needed():
    result = run("invariant", "-", stdin=SINGULAR_TREFOIL)
    assert result.returncode == 1
    assert "classical" in result.stderr
