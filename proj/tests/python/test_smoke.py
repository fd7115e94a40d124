"""Smoke tests for the Python bindings."""

import pytest

import maxsubfield as msf


def test_parse_canonicalizes():
    out = msf.parse_expr("x2*x1 - x1*x2 + x1*x2")
    assert out["canonical"] == "x2*x1"
    assert out["is_word"] is True
    assert out["max_var"] == 2


def test_parse_error_positions():
    with pytest.raises(msf.ParseError):
        msf.parse_expr("x1 +")


def test_evaluate_commutator():
    value = msf.evaluate("x1*x2 - x2*x1", [[["1", "0"], ["0", "0"]], "e12"])
    assert value["entries"] == ["0", "1", "0", "0"]


def test_min_poly_of_companion():
    out = msf.min_poly("companion:-2,0,0")
    assert out["certificate"]["degree"] == 3
    assert out["certificate"]["min_poly"]["text"] == "x^3 - 2"


def test_build_pm_degree():
    out = msf.build_pm(4)
    assert out["certificate"]["degree"] == 4
    assert out["matrix"]["n"] == 4


def test_quaternion_commutator():
    value = msf.evaluate_quaternion("x1*x2 - x2*x1", ["0,1,0,0", "0,0,1,0"], a="-1", b="-1")
    assert value == {"t": "0", "x": "0", "y": "0", "z": "2"}


def test_max_subfield_quaternions():
    rep = msf.max_subfield("quat:-1,-1", "x1*x2-x2*x1")
    assert rep["maximal"] is True
    assert rep["certificate"]["degree"] == 2
    assert rep["model"]["division"] == "preset"


def test_max_subfield_matrix_roundtrip():
    rep = msf.max_subfield("matrix:2", "x1*x2-x2*x1", field="Fp:10007")
    assert rep["maximal"] is True
    # the reported assignment re-evaluates to the reported value
    rows = []
    for mat in rep["assignment"]:
        n = mat["n"]
        rows.append([[mat["entries"][i * n + j] for j in range(n)] for i in range(n)])
    value = msf.evaluate(rep["expression"], rows, field="Fp:10007")
    assert value == rep["value"]


def test_word_preimage_verifies():
    out = msf.word_preimage("x1*x2*x1^-1*x2^-1", "diag:2,5004", field="Fp:10007")
    assert out["verified"] is True
    assert len(out["assignment"]) == 2


def test_audit_bound_equality():
    rep = msf.audit_bound("matrix:2", "x1*x2-x2*x1", field="Fp:10007", trials=25)
    assert rep["max_degree_observed"] == 2
    assert rep["equality"] is True


def test_search_exhaustion_raises():
    with pytest.raises(msf.SearchExhausted):
        # over F_3 the commutator word search cannot hit a target needing
        # what the tiny field cannot provide within a 1-evaluation budget
        msf.word_preimage("x1*x2*x1^-1*x2^-1", "diag:2,5004", field="Fp:10007", budget=1)


def test_determinism():
    a = msf.max_subfield("matrix:2", "x1*x2-x2*x1", field="Fp:10007", seed=7)
    b = msf.max_subfield("matrix:2", "x1*x2-x2*x1", field="Fp:10007", seed=7)
    assert a == b
