from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.lattice import (
    RowBoundary,
    one_row_image_support,
    one_row_weight,
    skew_f,
    skew_f_conjugated,
    skew_g,
    skew_g_conjugated,
    two_row_transfer,
)
from hlspin.scalars import Params, q_pochhammer
from hlspin.signatures import Signature, SignatureError, c_factor
from hlspin.weights import BASIC, gauged_family


def test_single_row_f_is_a_straight_path(params: Params) -> None:
    # (1 - q)/(1 - s u) * xi(u)^k at u = 2
    assert skew_f(Signature.of(1), Signature(), [Fraction(2)], BASIC, params) == Fraction(10, 3)
    row = RowBoundary(Signature(), Signature.of(0), 1)
    assert one_row_weight(row, Fraction(2), BASIC, params) == Fraction(10, 9)


def test_f_of_zero_signature_is_q_factorial_over_spin_factors(params: Params) -> None:
    us = [Fraction(2), Fraction(3)]
    expected = q_pochhammer(params.q, params.q, 2)
    for u in us:
        expected /= 1 - params.s * u
    assert skew_f(Signature.zeros(2), Signature(), us, BASIC, params) == expected
    assert expected == Fraction(200, 81)


def test_f_is_symmetric_in_its_variables(params: Params) -> None:
    mu = Signature.of(2, 1)
    forward = skew_f(mu, Signature(), [Fraction(2), Fraction(3, 7)], BASIC, params)
    backward = skew_f(mu, Signature(), [Fraction(3, 7), Fraction(2)], BASIC, params)
    assert forward == backward
    assert forward != 0


def test_g_row_and_empty_variable_list(params: Params) -> None:
    assert skew_g(Signature.of(0), Signature.of(0), [Fraction(2)], BASIC, params) == Fraction(13, 9)
    assert skew_g(Signature.of(2, 1), Signature.of(2, 1), [], BASIC, params) == 1
    assert skew_g(Signature.of(2, 1), Signature.of(1, 1), [], BASIC, params) == 0


def test_g_translates_negative_signatures(params: Params) -> None:
    vs = [Fraction(2), Fraction(1, 7)]
    shifted = skew_g(Signature.of(1, -1), Signature.of(0, -1), vs, BASIC, params)
    plain = skew_g(Signature.of(2, 0), Signature.of(1, 0), vs, BASIC, params)
    assert shifted == plain


def test_length_rules_are_enforced(params: Params) -> None:
    with pytest.raises(SignatureError):
        skew_f(Signature.of(1, 0), Signature(), [Fraction(2)], BASIC, params)
    with pytest.raises(SignatureError):
        skew_g(Signature.of(1, 0), Signature.of(0), [Fraction(2)], BASIC, params)
    with pytest.raises(SignatureError):
        RowBoundary(Signature.of(0), Signature.of(1), 1)


def test_conjugated_functions_scale_by_c_ratio(params: Params) -> None:
    mu, us = Signature.of(1, 1), [Fraction(2), Fraction(3)]
    plain = skew_f(mu, Signature(), us, BASIC, params)
    assert skew_f_conjugated(mu, Signature(), us, params) == c_factor(mu, params) * plain
    assert skew_f_conjugated(mu, Signature(), us, params, via_weights=True) == (
        skew_f_conjugated(mu, Signature(), us, params)
    )
    nu, zeros, vs = Signature.of(1, 0), Signature.zeros(2), [Fraction(2)]
    assert skew_g_conjugated(nu, zeros, vs, params) == (
        c_factor(nu, params) / c_factor(zeros, params) * skew_g(nu, zeros, vs, BASIC, params)
    )


def test_gauge_changes_f_rows_by_a_constant_and_leaves_g_alone(params: Params) -> None:
    gauge = {0: Fraction(1), 1: Fraction(7)}
    gauged = gauged_family(BASIC, gauge)
    mu, us = Signature.of(2, 0), [Fraction(2), Fraction(3)]
    assert skew_f(mu, Signature(), us, gauged, params) == 49 * skew_f(
        mu, Signature(), us, BASIC, params
    )
    nu, lower, vs = Signature.of(2, 1), Signature.of(1, 0), [Fraction(2), Fraction(1, 9)]
    assert skew_g(nu, lower, vs, gauged, params) == skew_g(nu, lower, vs, BASIC, params)


def test_one_row_image_support_lists_interlacing_signatures() -> None:
    f_images = list(one_row_image_support(Signature.of(1), 1, 2))
    assert f_images == [
        Signature.of(1, 0),
        Signature.of(1, 1),
        Signature.of(2, 0),
        Signature.of(2, 1),
    ]
    assert list(one_row_image_support(Signature.of(1), 0, 2)) == [
        Signature.of(1),
        Signature.of(2),
    ]
    with pytest.raises(ValueError):
        list(one_row_image_support(Signature.of(3), 0, 2))


def test_two_row_transfer_is_four_by_four(params: Params) -> None:
    matrix = two_row_transfer(Signature.of(1, 0), Signature.of(2, 1), Fraction(2), Fraction(3), params)
    assert len(matrix) == 4
    assert all(len(row) == 4 for row in matrix)
