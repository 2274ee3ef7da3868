from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .formulas import f_symmetrized
from .scalars import Params, PoleError, Scalar, q_pochhammer, to_complex
from .signatures import Signature, c_factor

logger = logging.getLogger(__name__)

DEFAULT_START_NODES = 64
# Per-variable start for nested grids: 16^2 = 256 points in two variables.
DEFAULT_TORUS_START_NODES = 16
DEFAULT_MAX_NODES = 2**16
DEFAULT_RADIUS = 0.5

Integrand = Callable[[Sequence[complex]], complex]


class ContourError(ValueError):
    """Raised when a contour violates the containment conditions of an integral."""


class QuadratureError(RuntimeError):
    """Raised when node doubling hits its cap before two estimates agree."""

    def __init__(self, message: str, last_delta: float, node_count: int):
        super().__init__(message)
        self.last_delta = last_delta
        self.node_count = node_count


@dataclass(frozen=True)
class Contour:
    """Positively oriented circle."""

    center: complex = 0j
    radius: float = DEFAULT_RADIUS
    orientation: int = 1

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ContourError("Contour radius must be > 0.")
        if self.orientation != 1:
            raise ContourError("Only positively oriented contours are supported.")

    def contains(self, point: complex) -> bool:
        return abs(complex(point) - self.center) < self.radius

    def contains_q_image(self, q: complex) -> bool:
        """Whether the image of the circle under z -> q z lies strictly inside it."""

        return abs(q * self.center - self.center) + abs(q) * self.radius < self.radius

    def nodes(self, count: int, offset: float = 0.0) -> np.ndarray:
        angles = 2 * np.pi * (np.arange(count) + offset) / count
        return self.center + self.radius * np.exp(1j * angles)

    @classmethod
    def for_orthogonality(
        cls, params: Params, n: int, *, center: complex = 0j, radius: float = DEFAULT_RADIUS
    ) -> Contour:
        """A circle around {s, qs, ..., q^{n-1} s} containing its q-image and excluding 1/s."""

        contour = cls(center=complex(center), radius=radius)
        q, s = to_complex(params.q), to_complex(params.s)
        for j in range(n):
            point = q**j * s
            if not contour.contains(point):
                raise ContourError(f"Contour must contain q^{j} s = {point}.")
        if not contour.contains_q_image(q):
            raise ContourError("Contour must contain its own image under multiplication by q.")
        if contour.contains(1 / s):
            raise ContourError(f"Contour must not contain 1/s = {1 / s}.")
        return contour


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    node_count: int
    last_delta: float


def _torus_mean(f: Integrand, contour: Contour, dims: int, count: int) -> complex:
    # Variable d is shifted by d/(dims+1) of the node spacing so no two share a node.
    grids = [contour.nodes(count, offset=d / (dims + 1)) for d in range(dims)]
    total = 0j
    for point in itertools.product(*grids):
        jacobian = 1 + 0j
        for z in point:
            jacobian *= z - contour.center
        total += f(point) * jacobian
    return total / count**dims


def default_start_nodes(dims: int) -> int:
    """Initial nodes per variable before doubling."""

    return DEFAULT_START_NODES if dims == 1 else DEFAULT_TORUS_START_NODES


def torus_quadrature(
    f: Integrand,
    contour: Contour,
    dims: int,
    tol: float,
    *,
    start: Optional[int] = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> QuadratureResult:
    """(1/2 pi i)^dims times the nested integral of f over copies of ``contour``.

    Node counts per variable double until two estimates differ by less than
    ``tol``; ``max_nodes`` bounds the total number of grid points.
    """

    if tol <= 0:
        raise ValueError("Quadrature tolerance must be > 0.")
    if dims < 1:
        raise ValueError("torus_quadrature requires dims >= 1.")
    count = start or default_start_nodes(dims)
    previous = _torus_mean(f, contour, dims, count)
    last_delta = math.inf
    while (2 * count) ** dims <= max_nodes:
        count *= 2
        value = _torus_mean(f, contour, dims, count)
        last_delta = abs(value - previous)
        logger.debug(f"Quadrature with {count}^{dims} nodes changed by {last_delta:.3e}")
        if last_delta < tol:
            return QuadratureResult(value=value, node_count=count**dims, last_delta=last_delta)
        previous = value
    raise QuadratureError(
        f"quadrature non-convergence after {count}^{dims} nodes (lastDelta={last_delta:.3e})",
        last_delta=last_delta,
        node_count=count**dims,
    )


def circle_quadrature(
    f: Callable[[complex], complex],
    contour: Contour,
    tol: float,
    *,
    start: int = DEFAULT_START_NODES,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> QuadratureResult:
    """(1/2 pi i) times the contour integral of a one-variable integrand."""

    return torus_quadrature(
        lambda point: f(point[0]), contour, 1, tol, start=start, max_nodes=max_nodes
    )


def complex_params(params: Params) -> Params:
    return Params.create(to_complex(params.q), to_complex(params.s), depth=params.depth)


def _cross_factor(us: Sequence[complex], q: complex) -> complex:
    value = 1 + 0j
    for i, ui in enumerate(us):
        for j, uj in enumerate(us):
            if i != j:
                value *= (ui - uj) / (ui - q * uj)
    return value


def _f_at(sig: Signature, us: Sequence[complex], params: Params) -> complex:
    try:
        return complex(f_symmetrized(sig, list(us), params))
    except PoleError as exc:
        raise QuadratureError(f"integrand pole on the contour: {exc}", math.inf, 0) from exc


def spatial_orthogonality(
    mu: Signature,
    nu: Signature,
    params: Params,
    tol: float = 1e-9,
    contour: Optional[Contour] = None,
) -> QuadratureResult:
    """c(nu)/((1-q)^n n!) times the nested integral pairing F_nu(u) with F_mu(1/u)."""

    n = len(nu)
    if len(mu) != n:
        raise ValueError("spatial_orthogonality needs signatures of equal length.")
    if n < 1 or n > 3:
        raise ValueError("spatial_orthogonality supports 1 <= n <= 3.")
    numeric = complex_params(params)
    contour = contour or Contour.for_orthogonality(numeric, n)
    q = complex(numeric.q)
    prefactor = complex(c_factor(nu, numeric)) / ((1 - q) ** n * math.factorial(n))

    def _integrand(us: Sequence[complex]) -> complex:
        value = _cross_factor(us, q) * _f_at(nu, us, numeric)
        value *= _f_at(mu, [1 / u for u in us], numeric)
        for u in us:
            value /= u
        return value

    result = torus_quadrature(_integrand, contour, n, tol / max(abs(prefactor), 1.0))
    return QuadratureResult(
        value=prefactor * result.value,
        node_count=result.node_count,
        last_delta=abs(prefactor) * result.last_delta,
    )


def spatial_check_integral(
    nu: Signature,
    vs: Sequence[Scalar],
    params: Params,
    tol: float = 1e-9,
    contour: Optional[Contour] = None,
) -> QuadratureResult:
    """Coefficient of F_nu in the Cauchy kernel, extracted by spatial orthogonality."""

    nu.require_nonnegative()
    n = len(nu)
    if n < 1 or n > 3:
        raise ValueError("spatial_check_integral supports 1 <= n <= 3.")
    numeric = complex_params(params)
    contour = contour or Contour.for_orthogonality(numeric, n)
    q, s = complex(numeric.q), complex(numeric.s)
    points = [to_complex(v) for v in vs]
    for v in points:
        if contour.contains(1 / v):
            raise ContourError(f"Contour must not contain 1/v = {1 / v}.")
    zeros = Signature.zeros(n)
    prefactor = complex(q_pochhammer(q, q, n)) * complex(c_factor(zeros, numeric))
    prefactor /= (1 - q) ** n * math.factorial(n)

    def _integrand(us: Sequence[complex]) -> complex:
        value = _cross_factor(us, q) * _f_at(nu, [1 / u for u in us], numeric)
        for u in us:
            value /= u * (1 - s * u)
            for v in points:
                value *= (1 - q * u * v) / (1 - u * v)
        return value

    result = torus_quadrature(_integrand, contour, n, tol / max(abs(prefactor), 1.0))
    return QuadratureResult(
        value=prefactor * result.value,
        node_count=result.node_count,
        last_delta=abs(prefactor) * result.last_delta,
    )
