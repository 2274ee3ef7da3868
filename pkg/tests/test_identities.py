from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.identities import (
    CATALOG,
    OUT_OF_SCOPE,
    ConvergenceGateError,
    UnknownIdentityError,
    check_cauchy,
    check_skew_cauchy_single,
    convergence_ratio,
    require_convergent,
    resolve_ids,
    run_check,
    run_suite,
)
from hlspin.lattice import skew_g
from hlspin.report import CheckConfig
from hlspin.scalars import Params
from hlspin.signatures import Signature
from hlspin.weights import fused_family

SMALL = CheckConfig(max_length=2, max_part=2, points=1)


def test_catalog_ids_are_unique_and_referenced() -> None:
    assert len(CATALOG) == 38
    for check_id, check in CATALOG.items():
        assert check.id == check_id
        assert check.kind in ("exact", "truncated", "quadrature")
        assert check.paper_ref
    assert "spectral-orthogonality" in OUT_OF_SCOPE
    assert "spectral-orthogonality" not in CATALOG


def test_resolve_ids_expands_all_and_deduplicates() -> None:
    assert resolve_ids(["all"]) == sorted(CATALOG)
    assert resolve_ids(["cauchy", "symmetry", "cauchy"]) == ["cauchy", "symmetry"]
    with pytest.raises(UnknownIdentityError) as exc_info:
        resolve_ids(["no-such-id"])
    assert str(exc_info.value) == "Unknown identity id: no-such-id"


def test_empty_suite_returns_no_reports() -> None:
    assert run_suite([], SMALL) == []


@pytest.mark.parametrize(
    "check_id",
    [
        "yang-baxter",
        "cross-conjugation",
        "weight-support",
        "gauge-invariance",
        "cross-method",
        "symmetry",
        "branching",
        "shift",
        "g-via-f",
        "stability",
        "conjugation",
        "principal",
        "qhahn-row",
        "qhahn-support",
        "degeneration-hl",
        "degeneration-schur",
        "degeneration-rational",
        "symmetrization-identity",
        "residue-identity",
        "two-row-transfer",
        "transfer-conjugation",
    ],
)
def test_exact_checks_pass_at_a_sampled_point(check_id: str) -> None:
    report = run_check(check_id, SMALL)
    assert report.id == check_id
    assert report.kind == "exact"
    assert report.passed, report.diagnostics.detail
    assert report.seed_index == 0


@pytest.mark.parametrize(
    "check_id",
    [
        "fused-row-stack",
        "fused-polynomial",
        "fused-principal",
        "qhahn-eigenvalue",
        "degeneration-inhom-hl",
        "degeneration-inhom-schur",
        "rational-limit",
        "inhom-limit",
        "skew-cauchy-single",
        "skew-cauchy",
        "pieri-f",
        "pieri-g",
        "cauchy-companions",
        "fused-eigenrelation",
        "spatial-check",
    ],
)
def test_remaining_catalog_checks_pass_at_a_sampled_point(check_id: str) -> None:
    report = run_check(check_id, SMALL)
    assert report.id == check_id
    assert report.kind == CATALOG[check_id].kind
    assert report.passed, report.diagnostics.detail


def test_exhaustive_checks_use_the_configured_grid() -> None:
    report = run_check("cross-method", CheckConfig(max_length=4, max_part=5, points=1))
    assert report.passed, report.diagnostics.detail
    # 209 F comparisons, 836 subset-form G and 441 full-form G, including N = n - k
    assert report.diagnostics.terms == 1486


@pytest.mark.parametrize("check_id", ["symmetry", "branching"])
def test_symmetry_and_branching_cover_every_variable_count(check_id: str) -> None:
    report = run_check(check_id, CheckConfig(max_length=3, max_part=2, points=1))
    assert report.passed, report.diagnostics.detail
    assert len(report.params["us"]) == len(report.params["vs"]) == 3
    # adjacent swaps (symmetry) or split points (branching) for 2 and 3 variables
    assert report.diagnostics.terms == 93


def test_skew_cauchy_single_from_the_empty_signature(params: Params) -> None:
    quarter = Fraction(1, 4)
    report = check_skew_cauchy_single(
        Signature(), Signature.of(0), quarter, quarter, params, CheckConfig()
    )
    assert report.passed, report.diagnostics.detail
    assert report.residual <= 1e-10
    assert report.params["lambda"] == ""
    assert report.params["mu"] == "0"


def test_cauchy_identity_at_quarter_points(params: Params) -> None:
    u = v = Fraction(1, 4)
    report = check_cauchy([u], [v], params, CheckConfig())
    assert report.passed
    assert report.residual <= 1e-10
    assert report.diagnostics.cap is not None
    assert report.diagnostics.tail_estimate is not None


def test_run_check_accepts_overrides(params: Params) -> None:
    report = run_check(
        "cauchy",
        CheckConfig(points=1),
        params=params,
        inputs={"us": [Fraction(1, 4)], "vs": [Fraction(1, 4)]},
    )
    assert report.passed
    assert report.params["q"] == "1/3"
    assert report.params["s"] == "1/5"


def test_convergence_gate(params: Params) -> None:
    rho = convergence_ratio([Fraction(3)], [Fraction(3)], params)
    assert rho == pytest.approx(49.0)
    with pytest.raises(ConvergenceGateError):
        require_convergent(rho)


def test_convergence_violation_becomes_failing_report(params: Params) -> None:
    report = run_check(
        "cauchy",
        CheckConfig(points=1),
        params=params,
        inputs={"us": [Fraction(3)], "vs": [Fraction(3)]},
    )
    assert not report.passed
    assert report.residual == 1.0
    assert report.diagnostics.detail["errorType"] == "ConvergenceGateError"


def test_pole_becomes_failing_report(params: Params) -> None:
    report = run_check(
        "cauchy",
        CheckConfig(points=1),
        params=params,
        inputs={"us": [Fraction(5)], "vs": [Fraction(1, 4)]},
    )
    assert not report.passed
    assert report.diagnostics.detail["errorType"] == "PoleError"


def test_suite_reports_are_sorted_and_reproducible() -> None:
    cfg = CheckConfig(max_length=2, max_part=2, points=2)
    first = run_suite(["symmetry", "branching"], cfg)
    assert [(r.id, r.seed_index) for r in first] == [
        ("branching", 0),
        ("branching", 1),
        ("symmetry", 0),
        ("symmetry", 1),
    ]
    second = run_suite(["branching", "symmetry"], cfg, threads=2)
    assert [r.to_json_dict() for r in first] == [r.to_json_dict() for r in second]


def test_spatial_orthogonality_on_the_diagonal() -> None:
    report = run_check("spatial-orthogonality", CheckConfig(points=1))
    assert report.kind == "quadrature"
    assert report.passed
    assert report.diagnostics.node_count is not None


def test_fused_g_vanishes_at_the_special_fusion_point(params: Params) -> None:
    v = Fraction(2)
    t = 1 / (v * params.s)
    family = fused_family(t)
    for nu in (Signature.of(1, 0), Signature.of(2, 0), Signature.of(0, 0)):
        assert skew_g(nu, Signature.zeros(2), [v], family, params) == 0
