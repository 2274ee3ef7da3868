from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, NamedTuple, Optional, Union

from .matrix import Matrix
from .scalars import (
    Params,
    PoleError,
    Scalar,
    divide,
    is_zero,
    lift,
    power,
    q_pochhammer,
    regularized_phi,
    zero_like,
)

logger = logging.getLogger(__name__)

# Row and column order of the 4x4 two-vertex matrices: (k1, k2) and (k1', k2').
BIT_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))

DEGENERATE_FAMILIES = ("hl-s0", "inhom-hl", "schur-q0", "inhom-schur", "rational")


class VertexConfig(NamedTuple):
    """Edge occupancies (South, West, North, East) around one vertex."""

    i1: int
    j1: int
    i2: int
    j2: int

    @property
    def conserving(self) -> bool:
        return self.i1 + self.j1 == self.i2 + self.j2

    @property
    def nonnegative(self) -> bool:
        return min(self) >= 0

    def __str__(self) -> str:
        return f"({self.i1},{self.j1};{self.i2},{self.j2})"


WeightKernel = Callable[[VertexConfig, Scalar, Params], Scalar]
SupportPredicate = Callable[[VertexConfig], bool]


def spin_half_support(cfg: VertexConfig) -> bool:
    return cfg.nonnegative and cfg.conserving and cfg.j1 <= 1 and cfg.j2 <= 1


def conserving_support(cfg: VertexConfig) -> bool:
    return cfg.nonnegative and cfg.conserving


def q_hahn_support(cfg: VertexConfig) -> bool:
    return conserving_support(cfg) and cfg.i2 >= cfg.j1


@dataclass(frozen=True)
class WeightFamily:
    """A named vertex-weight kernel with its support and gauge metadata.

    ``capacity`` bounds the horizontal occupancy; ``None`` means unbounded.
    """

    name: str
    evaluate: WeightKernel
    support: SupportPredicate
    gauge_class: str
    capacity: Optional[int] = 1

    def weight(self, cfg: VertexConfig, spectral: Scalar, params: Params) -> Scalar:
        if not self.support(cfg):
            return zero_like(spectral, params.q, params.s)
        return self.evaluate(cfg, spectral, params)


def _spin_half(u: Scalar, cfg: VertexConfig, q: Scalar, s: Scalar) -> Scalar:
    u = lift(u)
    zero = zero_like(u, q, s)
    if not spin_half_support(cfg):
        return zero
    i1, j1, i2, j2 = cfg
    denominator = 1 - s * u
    if is_zero(denominator):
        raise PoleError("weight pole", f"{cfg} u={u}")
    if j1 == 0 and j2 == 0:
        return (1 - s * power(q, i1) * u) / denominator
    if j1 == 1 and j2 == 1:
        return (u - s * power(q, i1)) / denominator
    if j1 == 0 and j2 == 1:
        return (1 - s * s * power(q, i2)) * u / denominator
    return (1 - power(q, i2)) / denominator


def basic_weight(u: Scalar, cfg: VertexConfig, params: Params) -> Scalar:
    """Spin-1/2 row weight w_u(i1, j1; i2, j2)."""

    return _spin_half(u, VertexConfig(*cfg), params.q, params.s)


def conjugation_ratio(cfg: VertexConfig, params: Params) -> Scalar:
    """(q;q)_{i1} (s^2;q)_{i2} / ((q;q)_{i2} (s^2;q)_{i1})."""

    q, s = params.q, params.s
    numerator = q_pochhammer(q, q, cfg.i1) * q_pochhammer(s * s, q, cfg.i2)
    denominator = q_pochhammer(q, q, cfg.i2) * q_pochhammer(s * s, q, cfg.i1)
    return divide(numerator, denominator, kind="weight pole", location=str(cfg))


def conjugated_weight(u: Scalar, cfg: VertexConfig, params: Params) -> Scalar:
    cfg = VertexConfig(*cfg)
    value = basic_weight(u, cfg, params)
    if is_zero(value):
        return value
    return value * conjugation_ratio(cfg, params)


def two_vertex_weight(
    u1: Scalar,
    u2: Scalar,
    m: int,
    n: int,
    k1: int,
    k2: int,
    k1p: int,
    k2p: int,
    params: Params,
) -> Scalar:
    """Column of two stacked vertices: u1 below (m in, k1 -> k1'), u2 above (k2 -> k2', n out)."""

    if m < 0 or n < 0:
        raise ValueError("Two-vertex weights require m, n >= 0.")
    middle = m + k1 - k1p
    if middle < 0 or middle != n + k2p - k2:
        return zero_like(u1, u2, params.q, params.s)
    lower = basic_weight(u1, VertexConfig(m, k1, middle, k1p), params)
    if is_zero(lower):
        return lower
    return lower * basic_weight(u2, VertexConfig(middle, k2, n, k2p), params)


def two_vertex_matrix(u1: Scalar, u2: Scalar, m: int, n: int, params: Params) -> Matrix:
    return [
        [two_vertex_weight(u1, u2, m, n, k1, k2, k1p, k2p, params) for k1p, k2p in BIT_PAIRS]
        for k1, k2 in BIT_PAIRS
    ]


def twisted_two_vertex_matrix(
    u2: Scalar, u1: Scalar, m: int, n: int, params: Params
) -> Matrix:
    """Entry (k1,k2;k1',k2') is w_{u2,u1}(k2,k1;k2',k1')."""

    return [
        [two_vertex_weight(u2, u1, m, n, k2, k1, k2p, k1p, params) for k1p, k2p in BIT_PAIRS]
        for k1, k2 in BIT_PAIRS
    ]


def cross_matrix(u1: Scalar, u2: Scalar, q: Scalar) -> Matrix:
    """The 4x4 matrix intertwining w_{u1,u2} with the twisted w_{u2,u1}."""

    u1, u2, q = lift(u1), lift(u2), lift(q)
    denominator = u1 - q * u2
    if is_zero(denominator):
        raise PoleError("cross matrix singular", f"u1={u1}, u2={u2}")
    zero, one = zero_like(u1, u2, q), zero_like(u1, u2, q) + 1
    return [
        [one, zero, zero, zero],
        [zero, q * (u1 - u2) / denominator, (1 - q) * u1 / denominator, zero],
        [zero, (1 - q) * u2 / denominator, (u1 - u2) / denominator, zero],
        [zero, zero, zero, one],
    ]


def fused_weight(v: Scalar, t: Scalar, cfg: VertexConfig, params: Params) -> Scalar:
    """Higher-spin row weight with t standing for q^J, in the integer-exponent gauge.

    The q^{(i1^2+i2^2)/4 + (i1(j1-1)+i2 j2)/2} power is replaced by
    q^{i1(i1-1)/2 + i1 j1}, which differs by the gauge ratio q^{j1^2/4}/q^{j2^2/4}.
    """

    cfg = VertexConfig(*cfg)
    v, t = lift(v), lift(t)
    q, s = params.q, params.s
    if not conserving_support(cfg):
        return zero_like(v, t, q, s)
    i1, j1, i2, _ = cfg
    try:
        denominator = q_pochhammer(q, q, i1) * q_pochhammer(v * s, q, i1 + j1)
        if is_zero(denominator):
            raise PoleError("fused weight pole", str(cfg))
        prefactor = (
            power(-1, i1 + j1)
            * power(q, i1 * (i1 - 1) // 2 + i1 * j1)
            * power(s, j1 - i1)
            * power(v, i1)
            * q_pochhammer(v / s, q, j1 - i2)
        )
        if is_zero(prefactor):
            return prefactor
        if i1 == 0:
            series = zero_like(v, t, q, s) + 1
        else:
            if is_zero(v):
                raise PoleError("fused weight pole", f"{cfg} v=0")
            series = regularized_phi(
                3,
                i1,
                (power(q, -i2), t * s * v, q * s / v),
                (s * s, power(q, 1 + j1 - i2), t * power(q, 1 - i1 - j1)),
                q,
                q,
            )
    except PoleError as exc:
        if exc.kind == "fused weight pole":
            raise
        raise PoleError("fused weight pole", f"{cfg}: {exc}") from exc
    return prefactor * series / denominator


def fused_weight_at_level(v: Scalar, level: int, cfg: VertexConfig, params: Params) -> Scalar:
    """fused_weight with t = q^level for an integer level J >= 1."""

    if level < 1:
        raise ValueError("Fusion level must be >= 1.")
    return fused_weight(v, power(params.q, level), cfg, params)


def q_hahn_weight(t: Scalar, cfg: VertexConfig, params: Params) -> Scalar:
    """v = s degeneration of the fused weights, supported on i2 >= j1."""

    cfg = VertexConfig(*cfg)
    t = lift(t)
    q, s = params.q, params.s
    if not q_hahn_support(cfg):
        return zero_like(t, q, s)
    _, j1, i2, _ = cfg
    try:
        numerator = (
            power(-s, -j1)
            * power(s * s * t, j1)
            * q_pochhammer(1 / t, q, j1)
            * q_pochhammer(s * s * t, q, i2 - j1)
            * q_pochhammer(q, q, i2)
        )
        denominator = (
            q_pochhammer(s * s, q, i2)
            * q_pochhammer(q, q, j1)
            * q_pochhammer(q, q, i2 - j1)
        )
    except ZeroDivisionError as exc:
        raise PoleError("q-Hahn weight pole", f"{cfg}: {exc}") from exc
    return divide(numerator, denominator, kind="q-Hahn weight pole", location=str(cfg))


def _inhomogeneous(z: Scalar, cfg: VertexConfig, q: Scalar) -> Scalar:
    z = lift(z)
    if not spin_half_support(cfg):
        return zero_like(z, q)
    i1, j1, i2, j2 = cfg
    one = zero_like(z, q) + 1
    if j1 == 0 and j2 == 0:
        return one
    if j1 == 1 and j2 == 1:
        return z - power(q, i1)
    if j1 == 0 and j2 == 1:
        return z * one
    return 1 - power(q, i2)


def _rational(x: Scalar, cfg: VertexConfig, zeta: Scalar) -> Scalar:
    x, zeta = lift(x), lift(zeta)
    if not spin_half_support(cfg):
        return zero_like(x, zeta)
    denominator = zeta + x
    if is_zero(denominator):
        raise PoleError("weight pole", f"{cfg} zeta + x = 0")
    i1, j1, i2, j2 = cfg
    if j1 == 0 and j2 == 0:
        return (i1 + zeta + x) / denominator
    if j1 == 1 and j2 == 1:
        return (i1 + zeta - x) / denominator
    if j1 == 0 and j2 == 1:
        return (i2 + 2 * zeta) / denominator
    return i2 / denominator


def degenerate_weight(
    family: str,
    spectral: Scalar,
    cfg: VertexConfig,
    params: Params,
    zeta: Optional[Scalar] = None,
) -> Scalar:
    """Weights of the degenerations: s=0, inhomogeneous s->0, q=0 and the rational limit."""

    cfg = VertexConfig(*cfg)
    q, s = params.q, params.s
    if family == "hl-s0":
        return _spin_half(spectral, cfg, q, q * 0)
    if family == "schur-q0":
        return _spin_half(spectral, cfg, q * 0, s)
    if family == "inhom-hl":
        return _inhomogeneous(spectral, cfg, q)
    if family == "inhom-schur":
        return _inhomogeneous(spectral, cfg, q * 0)
    if family == "rational":
        if zeta is None:
            raise ValueError("The rational family requires zeta.")
        return _rational(spectral, cfg, zeta)
    raise ValueError(
        f"Unknown degenerate family {family!r}; expected one of {', '.join(DEGENERATE_FAMILIES)}."
    )


BASIC = WeightFamily(
    name="basic",
    evaluate=lambda cfg, u, params: basic_weight(u, cfg, params),
    support=spin_half_support,
    gauge_class="reference gauge",
)

CONJUGATED = WeightFamily(
    name="conjugated",
    evaluate=lambda cfg, u, params: conjugated_weight(u, cfg, params),
    support=spin_half_support,
    gauge_class="reference gauge times (q;q)_{i1}(s^2;q)_{i2}/((q;q)_{i2}(s^2;q)_{i1})",
)


def fused_family(t: Scalar) -> WeightFamily:
    return WeightFamily(
        name=f"fused(t={t})",
        evaluate=lambda cfg, v, params: fused_weight(v, t, cfg, params),
        support=conserving_support,
        gauge_class="f(j) = q^{j^2/4} removed relative to the R-matrix weights",
        capacity=None,
    )


def q_hahn_family(t: Scalar) -> WeightFamily:
    """Spectral argument is ignored: the family lives at v = s."""

    return WeightFamily(
        name=f"q-hahn(t={t})",
        evaluate=lambda cfg, _v, params: q_hahn_weight(t, cfg, params),
        support=q_hahn_support,
        gauge_class="f(j1)/f(j2) removed relative to the fused weights at v = s",
        capacity=None,
    )


def degenerate_family(family: str, zeta: Optional[Scalar] = None) -> WeightFamily:
    if family not in DEGENERATE_FAMILIES:
        raise ValueError(f"Unknown degenerate family {family!r}.")
    if family == "rational" and zeta is None:
        raise ValueError("The rational family requires zeta.")
    return WeightFamily(
        name=family,
        evaluate=lambda cfg, x, params: degenerate_weight(family, x, cfg, params, zeta),
        support=spin_half_support,
        gauge_class="reference gauge",
    )


GaugeFunction = Union[Mapping[int, Scalar], Callable[[int], Scalar]]


def gauged_family(family: WeightFamily, gauge: GaugeFunction) -> WeightFamily:
    """Multiply every weight by f(j1)/f(j2)."""

    lookup: Callable[[int], Scalar] = gauge.__getitem__ if isinstance(gauge, Mapping) else gauge

    def _evaluate(cfg: VertexConfig, spectral: Scalar, params: Params) -> Scalar:
        return family.evaluate(cfg, spectral, params) * lookup(cfg.j1) / lookup(cfg.j2)

    return WeightFamily(
        name=f"{family.name}*gauge",
        evaluate=_evaluate,
        support=family.support,
        gauge_class=family.gauge_class,
        capacity=family.capacity,
    )


def weight_table(
    family: WeightFamily, spectral: Scalar, params: Params, bound: int = 6
) -> Dict[VertexConfig, Scalar]:
    """All weights with entries <= bound; used by support and gauge diagnostics."""

    table: Dict[VertexConfig, Scalar] = {}
    for i1 in range(bound + 1):
        for j1 in range(bound + 1):
            for i2 in range(bound + 1):
                for j2 in range(bound + 1):
                    cfg = VertexConfig(i1, j1, i2, j2)
                    table[cfg] = family.weight(cfg, spectral, params)
    return table


def off_support_violations(
    family: WeightFamily, spectral: Scalar, params: Params, bound: int = 6
) -> List[VertexConfig]:
    """Configurations outside the declared support whose raw kernel is nonzero."""

    violations = []
    for i1 in range(bound + 1):
        for j1 in range(bound + 1):
            for i2 in range(bound + 1):
                for j2 in range(bound + 1):
                    cfg = VertexConfig(i1, j1, i2, j2)
                    if family.support(cfg):
                        continue
                    if not is_zero(family.evaluate(cfg, spectral, params)):
                        violations.append(cfg)
    if violations:
        logger.error(f"{family.name} is nonzero off its support: {violations[:5]}")
    return violations
