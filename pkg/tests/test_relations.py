"""Relation checkers and the report type."""

import pytest

from mes import (
    IndexWord,
    PrecisionCtx,
    RelationReport,
    check_antipode_zeta,
    check_distribution,
    check_gen_function_identity,
    check_restricted_double_shuffle,
    check_sum_formula,
    check_weighted_sum_formula,
    cusp_decomposition_demo,
    run_default_suite,
)

CTX = PrecisionCtx(precision=128, series_cutoff=20_000)


def test_double_shuffle_passes():
    r = check_restricted_double_shuffle(
        IndexWord(1, [(2, 0)]), IndexWord(1, [(3, 0)]), 10, CTX
    )
    assert r.passed and r.residual < 1e-20
    assert r.parameters["weight"] == 5


def test_double_shuffle_rejects_inadmissible():
    with pytest.raises(ValueError):
        check_restricted_double_shuffle(
            IndexWord(1, [(1, 0)]), IndexWord(1, [(3, 0)]), 10, CTX
        )


def test_distribution_exact_part():
    r = check_distribution(2, (2,), 10, CTX)
    assert r.passed and r.details["exact_divisor_part"]


def test_sum_formula():
    r = check_sum_formula(2, 4, 1, 10, CTX)
    assert r.passed and r.residual < 1e-20
    with pytest.raises(ValueError):
        check_sum_formula(2, 5, 1, 10, CTX)  # odd weight


def test_weighted_sum_formula():
    r = check_weighted_sum_formula(1, 4, 0, 10, CTX)
    assert r.passed and r.residual < 1e-20


def test_gen_function_identity():
    r = check_gen_function_identity(2, 5, 0, 1, 10, CTX)
    assert r.passed and r.residual < 1e-20


def test_antipode_zeta():
    r = check_antipode_zeta(2, (2, 2, 2), (0, 1, 1), CTX)
    assert r.passed and r.residual < 1e-20


def test_cusp_demo_reports_scalar():
    r = cusp_decomposition_demo(12, CTX)
    assert r.passed
    scalar = r.details["fitted_scalar"]
    assert abs(scalar[0] - 17 / 16) < 1e-12 and abs(scalar[1]) < 1e-12
    assert r.details["target"] == "Delta(q)/680"


def test_report_shape_and_failure_verdict():
    r = check_sum_formula(2, 4, 1, 10, CTX, tolerance=0.0)
    assert isinstance(r, RelationReport)
    assert not r.passed and r.verdict == "fail"
    blob = r.to_json()
    assert set(blob) >= {"relation", "parameters", "residual", "tolerance", "verdict"}


def test_default_suite_all_pass():
    reports = run_default_suite(10, CTX)
    assert len(reports) >= 15
    assert all(r.passed for r in reports)
    names = {r.relation for r in reports}
    assert names == {
        "double-shuffle",
        "distribution",
        "sum-formula",
        "weighted-sum",
        "genfun",
        "antipode",
        "cusp-demo",
    }
