"""
CLI Integration Tests for the qpascal Command Line

This suite runs complete jobs through ``qpascal.main.run`` and checks the JSON report
and the exit code of each. Exit codes carry the verdict: 0 irreducible or success, 10
reducible, 20 undecidable, 2 input error, 3 constraint violation, 1 internal failure.

The jobs form a small golden corpus covering every subcommand. Each test points
LOG_FILE into its temporary directory so runs never write logs into the checkout.

Test Coverage Areas:
- build, verify, decide, restrict and criterion on representative parameters
- Error reporting with kinds, caret markers and exit codes
- Report reproducibility apart from timing
- Text layout, raw coefficient records, @file arguments and --out
"""

import json

import pytest

from qpascal import main as app


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "logs" / "qpascal.log"))
    monkeypatch.setenv("LOG_LEVEL", "1")
    monkeypatch.delenv("SEED", raising=False)


def run_job(argv, capsys):
    """Run one job; return (exit code, parsed report or None, stderr)."""
    code = app.run(argv)
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


def test_build_dim6_concrete(capsys):
    code, report, _ = run_job(["build", "--dim6", "--lambda1", "2"], capsys)
    assert code == 0
    rep = report["result"]["representation"]
    assert rep["dimension"] == 6
    assert rep["braid_relation"] is True
    assert rep["admissible"] is True
    assert report["command"] == "build"
    assert report["schema_version"] == 1


def test_build_dimension_two_closed_form(capsys):
    """n = 1, q = 1, Lambda = I: sigma1 = [[1, 1], [0, 1]] and sigma2 = [[1, 0], [-1, 1]]."""
    code, report, _ = run_job(["build", "--n", "1", "--q", "1", "--lambdas", "1,1"], capsys)
    assert code == 0
    rep = report["result"]["representation"]
    assert rep["sigma1"] == [["1", "1"], ["0", "1"]]
    assert rep["sigma2"] == [["1", "0"], ["-1", "1"]]
    assert rep["sigma1_eigenvalues"] == ["1", "1"]


def test_decide_irreducible_lambda(capsys):
    code, report, _ = run_job(["decide", "--lambda1", "2", "--workers", "1"], capsys)
    assert code == 0
    verdict = report["result"]["verdict"]
    assert verdict["status"] == "irreducible"
    assert verdict["witnesses"] == []
    assert [len(verdict["trace"][str(d)]) for d in range(1, 6)] == [5, 11, 14, 11, 5]


def test_decide_reducible_lambda(capsys):
    code, report, _ = run_job(["decide", "--dim6", "--lambda1", "z(9)", "--workers", "1"], capsys)
    assert code == 10
    verdict = report["result"]["verdict"]
    assert verdict["status"] == "reducible"
    assert any(w["dimension"] == 2 for w in verdict["witnesses"])


def test_decide_identity_lambda_reducible(capsys):
    argv = ["decide", "--n", "2", "--q=-1", "--lambdas", "1,1,1"]
    code, report, _ = run_job(argv, capsys)
    assert code == 10
    assert report["result"]["verdict"]["details"]["method"] == "algebra"


def test_restrict_cube_root(capsys):
    code, report, _ = run_job(["restrict", "--lambda1", "z(9)^2", "--workers", "1"], capsys)
    assert code == 0
    assert report["result"]["restriction"]["braid_relation"] is True
    assert report["result"]["restriction"]["Y_prime"][2][2] == "0"
    details = report["result"]["verdict"]["details"]
    assert details["e_profile_matches"] is True


def test_criterion_minors_and_identity(capsys):
    code, report, _ = run_job(["criterion", "--n", "2", "--lambdas", "1,1,1"], capsys)
    assert code == 0
    crit = report["result"]["minors_criterion_q1"]
    assert crit["holds"] is True
    assert crit["witness_rows"] == {"0": [0, 1], "1": [0]}

    code, report, _ = run_job(["criterion", "--n", "2", "--q=-1"], capsys)
    assert code == 0
    ident = report["result"]["identity_lambda"]
    assert ident == {"q_integer_nonzero": False, "generates_full_algebra": False}


def test_verify_dim6_with_oracle(capsys, monkeypatch):
    monkeypatch.setenv("SEED", "3")
    argv = ["verify", "--dim6", "--lambda1", "z(9)", "--oracle-samples", "20"]
    code, report, _ = run_job(argv, capsys)
    assert code == 0
    checks = report["result"]["checks"]
    assert checks["braid_relation"] is True
    assert checks["diagonalized"] is True
    assert checks["matches_general_construction"] is True
    names = [c["name"] for c in checks["printed_values"]]
    assert names == ["line_second_component", "k3_first_component"]
    assert checks["oracle"]["seed"] == 3
    assert checks["oracle"]["disagreements"] == []


def test_verify_exits_1_when_a_check_fails(capsys, monkeypatch):
    monkeypatch.setattr("qpascal.main.diagonalization_holds", lambda rep, pair: False)
    code, report, _ = run_job(["verify", "--dim6", "--lambda1", "2"], capsys)
    assert code == 1
    assert report["result"]["checks"]["diagonalized"] is False


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["build", "--n", "2", "--q", "2", "--lambdas", "1,2,3"], "lambda_condition_violated"),
        (["build", "--n", "1", "--q", "0", "--lambdas", "1,1"], "zero_parameter"),
        (["decide", "--lambda1", "1"], "inadmissible_lambda"),
        (["restrict", "--lambda1", "2"], "constraint_violated"),
    ],
)
def test_constraint_violations_exit_3(argv, kind, capsys):
    code, report, err = run_job(argv, capsys)
    assert code == 3
    assert report is None
    assert f"[error] {kind}:" in err


def test_parse_error_shows_caret(capsys):
    code, _, err = run_job(["build", "--n", "1", "--q", "1 +", "--lambdas", "1,1"], capsys)
    assert code == 2
    lines = err.splitlines()
    assert lines[0].startswith("[error] parse_error:")
    assert lines[1] == "  1 +"
    assert lines[2] == "  " + " " * 3 + "^"


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["decide"], "usage_error"),
        (["build", "--dim6", "--lambda1", "z(5)", "--conductor", "12"], "conductor_mismatch"),
        (["decide", "--lambda1", "L"], "usage_error"),
        (["criterion", "--n", "2"], "usage_error"),
    ],
)
def test_input_errors_exit_2(argv, kind, capsys):
    code, _, err = run_job(argv, capsys)
    assert code == 2
    assert f"[error] {kind}:" in err


def test_unknown_subcommand_exits_through_argparse(capsys):
    with pytest.raises(SystemExit) as exc_info:
        app.run(["bogus"])
    assert exc_info.value.code == 2


def test_reports_are_reproducible(capsys):
    argv = ["decide", "--lambda1", "z(9)^2", "--workers", "2"]
    _, first, _ = run_job(argv, capsys)
    _, second, _ = run_job(argv, capsys)
    first.pop("timing_ms")
    second.pop("timing_ms")
    assert first == second


def test_text_format(capsys):
    code = app.run(["build", "--dim6", "--lambda1", "2", "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "QPASCAL BUILD REPORT" in out
    assert "REPRESENTATION" in out
    assert "Indices are 0-based" in out


def test_raw_coefficients(capsys):
    argv = ["build", "--dim6", "--lambda1", "z(9)", "--raw-coeffs"]
    code, report, _ = run_job(argv, capsys)
    assert code == 0
    entry = report["result"]["representation"]["sigma1"][0][0]
    assert entry == {"conductor": 3, "coeffs": ["0", "1"]}


def test_file_arguments_and_out(tmp_path, capsys):
    lambdas = tmp_path / "lambdas.txt"
    lambdas.write_text("1,\n1  # lambda_1\n\n")
    out = tmp_path / "reports" / "build.json"
    code = app.run(
        ["build", "--n", "1", "--q", "1", "--lambdas", f"@{lambdas}", "--out", str(out)]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert report["result"]["representation"]["sigma1"] == [["1", "1"], ["0", "1"]]


def test_missing_file_argument_is_io_error(tmp_path, capsys):
    missing = tmp_path / "missing.txt"
    code = app.run(["build", "--n", "1", "--q", f"@{missing}", "--lambdas", "1,1"])
    assert code == 1
    assert "[error] io_error:" in capsys.readouterr().err
