import json

import pytest

from levelzero.qmodule.verify import SUITES, UnknownSuite, suite_names, verify_suite

FAST = ["drinfeld-fund", "tilde-p-realization", "tensor-rule", "kashiwara-adjoint", "q0-orthonormal",
        "graded-dims", "bar", "gram-almost-orthonormal", "convex-order", "macdonald", "crystal-regular"]


@pytest.mark.parametrize("name", FAST)
def test_suite_passes_with_defaults(name):
    r = verify_suite(name)
    assert r.status == "pass", r.counterexamples[:3]
    assert r.checks > 0
    payload = json.loads(json.dumps(r.to_json()))
    assert set(payload) >= {"suite", "params", "status", "witnesses", "counterexamples", "timings"}


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify_suite("no-such-suite")
    assert suite_names() == sorted(SUITES)


def test_drinfeld_witness():
    r = verify_suite("drinfeld-fund", {"n": 2})
    assert r.witnesses[0]["coefficient"] == "-q^-2"


def test_literal_vanishing_reports_counterexample():
    r = verify_suite("higher-p-vanishing")
    assert r.status == "fail" and r.counterexamples
    assert verify_suite("higher-p-vanishing", {"literal": False}).status == "pass"


def test_schur_image_realizations():
    assert verify_suite("schur-image", {"realization": "direct"}).status == "pass"
    dual = verify_suite("schur-image")
    assert dual.status == "fail"
    assert all(w["equals s_{c0'}(z^-1) u"] for w in dual.witnesses)


def test_graded_dims_never_passes_a_truncated_slot():
    r = verify_suite("graded-dims", {"band": 2, "n_max": 2})
    rows = r.witnesses[0]["table"]
    assert any(row["truncated"] for row in rows)
    assert all(row["status"] == "inconclusive" for row in rows if row["truncated"])


def test_gram_congruence_is_integral():
    r = verify_suite("gram-almost-orthonormal")
    assert r.witnesses[0]["entries in delta + qZ[q]"]
    assert r.witnesses[0]["size"] >= 20


def test_forms_suite_counts():
    r = verify_suite("forms", {"samples": 30})
    assert r.status == "pass"
    counts = r.witnesses[0]
    assert all(counts[k] > 0 for k in ("psi", "adjoint", "z", "symmetry", "norm", "extremal"))
