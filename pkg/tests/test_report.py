"""Tests for report payloads and the text layout."""

from fractions import Fraction

from qpascal.fields import Cyc, Poly, RatFunc
from qpascal.invariance import Status, SubspacePattern, Verdict, Witness
from qpascal.linalg import ExactMatrix, ExactVector
from qpascal.report import (
    build_report,
    element_to_json,
    matrix_to_json,
    poly_to_json,
    render_text,
    timed,
    verdict_to_json,
)


def test_elements_print_in_expression_syntax():
    assert element_to_json(Fraction(-3, 4)) == "-3/4"
    assert element_to_json(Cyc.zeta(3)) == "z(3)"
    assert element_to_json(RatFunc.variable() + 1) == "L + 1"


def test_raw_coefficient_records():
    assert element_to_json(Fraction(1, 2), raw=True) == {"conductor": 1, "coeffs": ["1/2"]}
    assert element_to_json(Cyc.zeta(4), raw=True) == {"conductor": 4, "coeffs": ["0", "1"]}
    f = element_to_json(1 / (RatFunc.variable() - 1), raw=True)
    assert f["den"]["var"] == "L"
    assert len(f["den"]["coeffs"]) == 2


def test_matrix_and_poly_payloads():
    assert matrix_to_json(ExactMatrix([[1, 0], [Fraction(1, 2), 2]])) == [["1", "0"], ["1/2", "2"]]
    p = poly_to_json(Poly([1, 0, 1], "L"))
    assert p == {"poly": "L^2 + 1", "degree": 2, "coeffs": ["1", "0", "1"]}


def test_verdict_payload():
    basis = (ExactVector.unit(3, 1),)
    verdict = Verdict(
        Status.REDUCIBLE,
        witnesses=[Witness(SubspacePattern((1,)), basis), Witness(None, basis)],
        details={"method": "algebra", "algebra_dimension": 5, "lambda1": Cyc.zeta(9)},
    )
    out = verdict_to_json(verdict)
    assert out["status"] == "reducible"
    assert out["witnesses"][0] == {"label": "<e1>", "dimension": 1, "basis": [["0", "1", "0"]]}
    assert out["witnesses"][1]["label"].startswith("span(")
    assert out["details"] == {"method": "algebra", "algebra_dimension": 5, "lambda1": "z(9)"}


def test_build_report_and_text_layout():
    report = build_report("decide", {"lambda1": "2"}, {"verdict": {"status": "irreducible"}}, 1.5)
    assert set(report) == {
        "schema_version",
        "engine_version",
        "command",
        "job",
        "result",
        "timing_ms",
    }
    text = render_text(report)
    lines = text.splitlines()
    assert lines[0] == "=" * 80
    assert lines[1] == "QPASCAL DECIDE REPORT"
    assert "  lambda1: 2" in lines
    assert "VERDICT" in lines
    assert "  status: irreducible" in lines
    assert "Elapsed: 1.5 ms" in lines


def test_timed_records_elapsed_ms():
    sink = {}
    with timed(sink):
        sum(range(1000))
    assert sink["timing_ms"] >= 0
