"""Command-line interface: output formats and exit codes."""

import csv
import io
import json

import pytest

from qzeta.cli import EXIT_FAIL, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bernoulli_json(capsys):
    code, out, _ = run(["bernoulli", "--h", "1", "--n", "2"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [row["n"] for row in doc] == [0, 1, 2]
    assert "rat" in doc[0]["value"] and "log" in doc[0]["value"]


def test_bernoulli_numeric_evaluation(capsys):
    code, out, _ = run(["bernoulli", "--h", "1", "--n", "2", "--q", "0.5"],
                       capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert abs(doc[2]["re"] - 0.1588830833596715) < 1e-12


def test_polynomial_output(capsys):
    code, out, _ = run(["polynomial", "--h", "2", "--n", "3"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [row["x_power"] for row in doc] == [0, 1, 2, 3]


def test_characters_csv(capsys):
    code, out, _ = run(["characters", "--modulus", "8", "--format", "csv"],
                       capsys)
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert sorted(int(r["conductor"]) for r in rows) == [1, 4, 8, 8]


def test_zeta_value_and_bound(capsys):
    code, out, _ = run(["zeta", "--h", "1", "--q", "0.5", "--s", "3.0"],
                       capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["certified_tail_bound"] < 1e-10


def test_lfunction_value(capsys):
    code, out, _ = run(["lfunction", "--h", "1", "--q", "0.4", "--s", "2.0",
                        "--modulus", "4", "--char-index", "1"], capsys)
    assert code == EXIT_OK
    json.loads(out)


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(["verify", "witt", "--p", "5", "--h", "1", "--n", "2",
                        "--levels", "3:4"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["pass"] is True
    # the one genuinely failing interpolation cell
    code, out, _ = run(["verify", "interp-l", "--h", "1", "--q", "0.4",
                        "--n", "1", "--modulus", "1", "--char-index", "0"],
                       capsys)
    assert code == EXIT_FAIL
    assert json.loads(out)["pass"] is False


def test_verify_distribution_and_genfunction(capsys):
    for target, extra in [("distribution", ["--n", "4", "--m", "3"]),
                          ("genfunction", ["--n", "6"])]:
        code, out, _ = run(["verify", target, "--h", "2"] + extra, capsys)
        assert code == EXIT_OK, target


def test_usage_errors_exit_2(capsys):
    assert run(["bernoulli", "--h", "1", "--n", "-3"], capsys)[0] == EXIT_USAGE
    assert run(["zeta", "--h", "1", "--q", "1.5", "--s", "2"],
               capsys)[0] == EXIT_USAGE
    assert run(["zeta", "--h", "1", "--q", "0.5", "--s", "1.0"],
               capsys)[0] == EXIT_USAGE
    assert run(["nonsense"], capsys)[0] == EXIT_USAGE


def test_numeric_failure_exit_3(capsys):
    # a tolerance the truncated series cannot certify within max terms
    code, _, err = run(["zeta", "--h", "1", "--q", "0.99999", "--s", "2.0",
                        "--tol", "1e-13", "--max-terms", "10"], capsys)
    assert code == EXIT_NUMERIC


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(["bernoulli", "--h", "1", "--n", "1",
                        "--out", str(path)], capsys)
    assert code == EXIT_OK
    assert out == ""
    json.loads(path.read_text())


def test_deterministic_output(capsys):
    a = run(["verify", "witt", "--p", "5", "--h", "1", "--n", "1",
             "--levels", "3:4"], capsys)[1]
    b = run(["verify", "witt", "--p", "5", "--h", "1", "--n", "1",
             "--levels", "3:4"], capsys)[1]
    assert a == b
