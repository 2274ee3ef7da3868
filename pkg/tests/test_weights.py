from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.scalars import Params, PoleError
from hlspin.weights import (
    BASIC,
    CONJUGATED,
    VertexConfig,
    basic_weight,
    cross_matrix,
    degenerate_family,
    degenerate_weight,
    gauged_family,
    off_support_violations,
    q_hahn_family,
    q_hahn_weight,
    two_vertex_matrix,
    weight_table,
)

U = Fraction(2)


@pytest.mark.parametrize(
    ("cfg", "expected"),
    [
        (VertexConfig(0, 0, 0, 0), Fraction(1)),
        (VertexConfig(2, 0, 2, 0), Fraction(43, 27)),
        (VertexConfig(0, 1, 0, 1), Fraction(3)),
        (VertexConfig(1, 0, 0, 1), Fraction(16, 5)),
        (VertexConfig(0, 1, 1, 0), Fraction(10, 9)),
    ],
)
def test_basic_weights_at_a_point(params: Params, cfg: VertexConfig, expected: Fraction) -> None:
    assert basic_weight(U, cfg, params) == expected


def test_basic_weights_vanish_off_support(params: Params) -> None:
    assert basic_weight(U, VertexConfig(1, 0, 0, 0), params) == 0
    assert basic_weight(U, VertexConfig(0, 2, 1, 1), params) == 0
    assert off_support_violations(BASIC, U, params, bound=3) == []
    assert len(weight_table(BASIC, U, params, bound=2)) == 3**4


def test_weight_pole_at_inverse_spin(params: Params) -> None:
    with pytest.raises(PoleError):
        basic_weight(Fraction(5), VertexConfig(0, 0, 0, 0), params)


def test_conjugated_weight_picks_up_multiplicity_ratio(params: Params) -> None:
    assert CONJUGATED.weight(VertexConfig(0, 1, 1, 0), U, params) == Fraction(8, 5)
    assert CONJUGATED.weight(VertexConfig(0, 0, 0, 0), U, params) == 1


def test_gauge_multiplies_by_ratio(params: Params) -> None:
    gauged = gauged_family(BASIC, {0: Fraction(1), 1: Fraction(2)})
    assert gauged.weight(VertexConfig(1, 0, 0, 1), U, params) == Fraction(8, 5)
    assert gauged.weight(VertexConfig(0, 1, 1, 0), U, params) == Fraction(20, 9)
    assert gauged.weight(VertexConfig(0, 1, 0, 1), U, params) == Fraction(3)


def test_q_hahn_weights_at_t_one(params: Params) -> None:
    assert q_hahn_weight(Fraction(1), VertexConfig(2, 0, 2, 0), params) == 1
    assert q_hahn_weight(Fraction(1), VertexConfig(2, 1, 2, 1), params) == 0
    # j1 > i2 lies outside the q-Hahn support
    assert q_hahn_weight(Fraction(3), VertexConfig(0, 1, 0, 1), params) == 0
    family = q_hahn_family(Fraction(3))
    assert family.capacity is None
    assert off_support_violations(family, Fraction(0), params, bound=3) == []


def test_degenerate_weights(params: Params) -> None:
    x = Fraction(3, 7)
    assert degenerate_weight("hl-s0", x, VertexConfig(0, 1, 0, 1), params) == x
    assert degenerate_weight("inhom-hl", x, VertexConfig(0, 1, 0, 1), params) == x - 1
    assert degenerate_weight("inhom-schur", x, VertexConfig(2, 0, 1, 1), params) == x
    zeta = Fraction(1, 2)
    assert degenerate_weight(
        "rational", x, VertexConfig(1, 0, 0, 1), params, zeta
    ) == (0 + 2 * zeta) / (zeta + x)
    with pytest.raises(ValueError):
        degenerate_family("rational")
    with pytest.raises(ValueError):
        degenerate_family("no-such-family")


def test_two_vertex_matrix_blocks(params: Params) -> None:
    matrix = two_vertex_matrix(Fraction(2), Fraction(3), 0, 0, params)
    assert len(matrix) == 4 and all(len(row) == 4 for row in matrix)
    # nothing enters or leaves vertically: only the empty row survives in the top-left entry
    assert matrix[0][0] == 1
    assert matrix[0][3] == 0


def test_cross_matrix_is_singular_only_at_u1_equal_q_u2(params: Params) -> None:
    with pytest.raises(PoleError):
        cross_matrix(Fraction(1, 3), Fraction(1), params.q)
    matrix = cross_matrix(Fraction(2), Fraction(3), params.q)
    assert matrix[0][0] == matrix[3][3] == 1
