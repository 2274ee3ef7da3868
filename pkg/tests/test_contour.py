from __future__ import annotations

import cmath
from fractions import Fraction

import pytest

from hlspin.contour import (
    Contour,
    ContourError,
    DEFAULT_START_NODES,
    DEFAULT_TORUS_START_NODES,
    QuadratureError,
    circle_quadrature,
    default_start_nodes,
    spatial_orthogonality,
    torus_quadrature,
)
from hlspin.scalars import Params
from hlspin.signatures import Signature

SPATIAL = Params.create(Fraction(2, 5), Fraction(3, 10))


def test_contour_validation() -> None:
    with pytest.raises(ContourError):
        Contour(radius=0)
    with pytest.raises(ContourError):
        Contour(orientation=-1)
    contour = Contour(radius=1.0)
    assert contour.contains(0.5)
    assert not contour.contains(2)
    assert contour.contains_q_image(0.4)


def test_orthogonality_contour_must_surround_the_s_points() -> None:
    contour = Contour.for_orthogonality(SPATIAL, 2)
    assert contour.radius == 0.5
    with pytest.raises(ContourError):
        Contour.for_orthogonality(SPATIAL, 1, radius=0.2)
    with pytest.raises(ContourError):
        Contour.for_orthogonality(SPATIAL, 1, radius=4.0)


def test_circle_quadrature_picks_up_simple_residue() -> None:
    contour = Contour(radius=1.0)
    result = circle_quadrature(lambda z: 1 / (z - 0.25), contour, 1e-12)
    assert result.value == pytest.approx(1.0, abs=1e-10)
    outside = circle_quadrature(lambda z: cmath.exp(z), contour, 1e-12)
    assert abs(outside.value) < 1e-10


def test_quadrature_reports_non_convergence() -> None:
    contour = Contour(radius=1.0)
    # a pole right next to the circle needs far more nodes than allowed
    with pytest.raises(QuadratureError) as exc_info:
        torus_quadrature(lambda p: 1 / (p[0] - 0.999999), contour, 1, 1e-14, max_nodes=256)
    assert exc_info.value.node_count <= 256


def test_start_nodes_depend_on_dimension() -> None:
    assert default_start_nodes(1) == DEFAULT_START_NODES == 64
    assert default_start_nodes(2) == default_start_nodes(3) == DEFAULT_TORUS_START_NODES == 16
    contour = Contour(radius=1.0)
    # a constant integrand settles after the first doubling
    single = torus_quadrature(lambda p: 1, contour, 1, 1e-12)
    assert single.node_count == 2 * DEFAULT_START_NODES
    double = torus_quadrature(lambda p: 1, contour, 2, 1e-12)
    assert double.node_count == (2 * DEFAULT_TORUS_START_NODES) ** 2


@pytest.mark.parametrize(
    ("mu", "nu", "expected"),
    [((0,), (0,), 1.0), ((1,), (0,), 0.0), ((2,), (2,), 1.0), ((1,), (2,), 0.0)],
)
def test_spatial_orthogonality_single_variable(mu: tuple, nu: tuple, expected: float) -> None:
    result = spatial_orthogonality(Signature(mu), Signature(nu), SPATIAL, tol=1e-10)
    assert abs(result.value - expected) < 1e-8
