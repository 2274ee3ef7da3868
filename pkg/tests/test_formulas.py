from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.formulas import (
    f_principal,
    f_symmetrized,
    g_principal,
    g_symmetrized,
    hall_littlewood_p,
    principal_points,
    rational_limit_g,
    residue_identity_check,
    schur_like_determinant,
    symmetrization_constant,
    symmetrization_sum,
)
from hlspin.lattice import skew_f, skew_g
from hlspin.scalars import Params
from hlspin.signatures import Signature, SignatureError
from hlspin.weights import BASIC

US = [Fraction(2), Fraction(3, 7)]
VS = [Fraction(2), Fraction(1, 9), Fraction(-3, 4)]


def test_single_variable_f(params: Params) -> None:
    assert f_symmetrized(Signature.of(1), [Fraction(2)], params) == Fraction(10, 3)


@pytest.mark.parametrize("parts", [(0, 0), (1, 0), (2, 1), (3, 3)])
def test_symmetrization_matches_lattice_for_f(params: Params, parts: tuple) -> None:
    mu = Signature(parts)
    assert f_symmetrized(mu, US, params) == skew_f(mu, Signature(), US, BASIC, params)


@pytest.mark.parametrize("parts", [(0,), (2,), (1, 0), (2, 1)])
def test_symmetrization_matches_lattice_for_g(params: Params, parts: tuple) -> None:
    nu = Signature(parts)
    lattice = skew_g(nu, Signature.zeros(len(nu)), VS, BASIC, params)
    assert g_symmetrized(nu, VS, params) == lattice
    assert g_symmetrized(nu, VS, params, subset_form=True) == lattice


def test_g_vanishes_with_too_few_variables(params: Params) -> None:
    assert g_symmetrized(Signature.of(3, 2, 1), VS[:2], params) == 0
    assert rational_limit_g(Signature.of(3, 2), [Fraction(1, 3)], Fraction(1, 2)) == 0


def test_f_variable_count_is_checked(params: Params) -> None:
    with pytest.raises(SignatureError):
        f_symmetrized(Signature.of(1, 0), [Fraction(2)], params)


def test_principal_specializations_match_general_formulas(params: Params) -> None:
    mu = Signature.of(2, 1, 0)
    u = Fraction(2, 5)
    assert f_principal(mu, u, params) == f_symmetrized(mu, principal_points(u, 3, params.q), params)
    nu = Signature.of(1, 0)
    v = Fraction(3)
    assert g_principal(nu, v, 2, params) == g_symmetrized(nu, principal_points(v, 2, params.q), params)


def test_q_zero_determinant_matches_lattice() -> None:
    params = Params.create(Fraction(0), Fraction(1, 5), relax=["q=0"])
    mu = Signature.of(2, 0)
    assert schur_like_determinant("F-q0", mu, US, params) == skew_f(
        mu, Signature(), US, BASIC, params
    )
    with pytest.raises(ValueError):
        schur_like_determinant("H-q0", mu, US, params)


def test_hall_littlewood_p_small_cases() -> None:
    q = Fraction(1, 3)
    x1, x2 = Fraction(2), Fraction(5)
    assert hall_littlewood_p(Signature.of(1), [x1], q) == x1
    assert hall_littlewood_p(Signature.of(1), [x1, x2], q) == x1 + x2
    assert hall_littlewood_p(Signature.of(1, 1, 1), [x1, x2], q) == 0


def test_symmetrization_identity_constant() -> None:
    q = Fraction(1, 3)
    assert symmetrization_constant(2, q) == 1 + q
    zs = [Fraction(2), Fraction(-1, 3), Fraction(5, 7)]
    assert symmetrization_sum(zs, q) == symmetrization_constant(3, q)


def test_residue_identity_report() -> None:
    report = residue_identity_check(2, [Fraction(2), Fraction(3)], Fraction(5), Fraction(1, 3))
    assert report.passed
    assert report.residual == 0.0
    assert report.kind == "exact"
    with pytest.raises(ValueError):
        residue_identity_check(0, [], Fraction(5), Fraction(1, 3))
