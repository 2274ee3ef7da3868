from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .config import settings
from .contour import (
    ContourError,
    QuadratureError,
    QuadratureResult,
    spatial_check_integral,
    spatial_orthogonality,
)
from .formulas import (
    f_principal,
    f_symmetrized,
    g_principal,
    g_symmetrized,
    hall_littlewood_p,
    hall_littlewood_q,
    hl_dictionary_factor,
    inhom_f_symmetrized,
    inhom_g_symmetrized,
    principal_points,
    rational_limit_f,
    rational_limit_g,
    residue_identity_check,
    schur_like_determinant,
    symmetrization_constant,
    symmetrization_sum,
)
from .lattice import (
    F_ROW,
    G_ROW,
    RowBoundary,
    g_via_f_prefactor,
    one_row_image_support,
    one_row_weight,
    skew_f,
    skew_f_conjugated,
    skew_g,
    skew_g_conjugated,
    two_row_transfer,
)
from .matrix import Matrix, inverse, matmul
from .report import CheckConfig, CheckKind, Diagnostics, Report
from .scalars import (
    COMPLEX,
    GenericityError,
    Params,
    PoleError,
    Scalar,
    backend_of,
    format_scalar,
    is_zero,
    power,
    q_pochhammer,
    random_near,
    random_rational,
    relative_residual,
    sample_generic_params,
    to_complex,
)
from .signatures import (
    Signature,
    SignatureError,
    bounded_signatures,
    enumerate_signatures,
)
from .weights import (
    BASIC,
    CONJUGATED,
    DEGENERATE_FAMILIES,
    VertexConfig,
    cross_matrix,
    degenerate_family,
    fused_family,
    fused_weight,
    gauged_family,
    off_support_violations,
    q_hahn_family,
    q_hahn_support,
    two_vertex_matrix,
    twisted_two_vertex_matrix,
)

logger = logging.getLogger(__name__)

NEAR_S_RADIUS = Fraction(1, 20)
EIGENRELATION_RADIUS = Fraction(1, 50)
LIMIT_TOLERANCE = 1e-4
LIMIT_EPSILON = 1e-6
SPATIAL_TOLERANCE = {1: 1e-8, 2: 1e-6, 3: 1e-5}
SPATIAL_PARAMS = (Fraction(2, 5), Fraction(3, 10))

CheckInputs = Dict[str, Any]
CheckRunner = Callable[[Params, Mapping[str, Any], CheckConfig], Report]
CheckSampler = Callable[[CheckConfig, int], Tuple[Params, CheckInputs]]


class ConvergenceGateError(ValueError):
    """Raised when sampled variables violate the convergence condition of a series."""


class TruncationError(RuntimeError):
    """Raised when a series does not stabilize before the part cap budget runs out."""

    def __init__(self, message: str, diagnostics: Diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class UnknownIdentityError(KeyError):
    def __init__(self, identity_id: str):
        super().__init__(identity_id)
        self.identity_id = identity_id

    def __str__(self) -> str:
        return f"Unknown identity id: {self.identity_id}"


REFERENCES: Dict[str, str] = {
    "yang-baxter": "Yang-Baxter relation for two-vertex weights and the cross matrix",
    "cross-conjugation": "matrix elements preserved by conjugation with the cross matrix",
    "weight-support": "vertex weight support discipline",
    "gauge-invariance": "row partition functions under f(j1)/f(j2) gauge factors",
    "cross-method": "lattice F and G against the symmetrization formulas",
    "symmetry": "symmetry of F and G in the spectral variables",
    "branching": "branching rules for skew F and G",
    "shift": "F under a uniform shift of all coordinates",
    "g-via-f": "G for signatures without zero parts in terms of F",
    "stability": "G under appending a zero variable",
    "conjugation": "conjugated skew functions via c-ratios and via conjugated weights",
    "principal": "principal specializations of F and G",
    "fused-row-stack": "stacked rows at a geometric progression against one fused row",
    "fused-polynomial": "fused weights are polynomial in t",
    "fused-principal": "one fused row from the empty boundary against principal G",
    "qhahn-row": "q-Hahn rows against fused rows at v = s",
    "qhahn-support": "q-Hahn support: no horizontal move by more than one unit",
    "qhahn-eigenvalue": "linear form of the q-Hahn eigenvalue factor",
    "degeneration-hl": "s = 0 dictionary with Hall-Littlewood P and Q",
    "degeneration-inhom-hl": "inhomogeneous Hall-Littlewood lattice against symmetrization",
    "degeneration-schur": "q = 0 lattice against determinant and symmetrization formulas",
    "degeneration-inhom-schur": "inhomogeneous q = 0 lattice against determinants",
    "degeneration-rational": "rational-weight lattice against the rational symmetrization",
    "rational-limit": "numeric q -> 1 limit of F and G towards the rational functions",
    "inhom-limit": "numeric s -> 0 limit of rescaled F and G",
    "symmetrization-identity": "sum over permutations of prod (z_i - q z_j)/(z_i - z_j)",
    "residue-identity": "partial-fraction identity for a cluster of size c1",
    "two-row-transfer": "two-row column transfer product against lattice F and G",
    "transfer-conjugation": "column transfer products under conjugation by the cross matrix",
    "skew-cauchy-single": "skew Cauchy identity in one u and one v",
    "skew-cauchy": "skew Cauchy identity in several variables",
    "pieri-f": "Pieri rule for F",
    "pieri-g": "Pieri rule for G",
    "cauchy": "Cauchy identity",
    "cauchy-companions": "companion identities from other cross-matrix elements",
    "fused-eigenrelation": "Pieri rule for F with a fused row and t = q^J",
    "spatial-orthogonality": "spatial biorthogonality of F",
    "spatial-check": "coefficient extraction from the Cauchy kernel",
}

OUT_OF_SCOPE: Dict[str, str] = {
    "spectral-orthogonality": (
        "spectral biorthogonality is stated with delta functions against unspecified "
        "test-function classes; no numeric check is attempted"
    ),
}


@dataclass
class _Tally:
    """Accumulates exact (or tolerance-based, on the complex backend) comparisons."""

    tolerance: float
    compared: int = 0
    residual: float = 0.0
    exact: bool = True
    failures: List[str] = field(default_factory=list)

    def compare(self, label: str, left: Scalar, right: Scalar) -> None:
        self.compared += 1
        if backend_of(left, right) == COMPLEX:
            self.exact = False
            gap = relative_residual(left, right)
            self.residual = max(self.residual, gap)
            if gap > self.tolerance:
                self.failures.append(label)
            return
        if left == right:
            return
        gap = relative_residual(left, right)
        self.residual = max(self.residual, gap if gap > 0 else math.ulp(0.0))
        self.failures.append(label)

    def expect(self, label: str, holds: bool) -> None:
        self.compared += 1
        if not holds:
            self.residual = max(self.residual, 1.0)
            self.failures.append(label)

    def compare_matrices(self, label: str, left: Matrix, right: Matrix) -> None:
        for i, (row_left, row_right) in enumerate(zip(left, right)):
            for j, (a, b) in enumerate(zip(row_left, row_right)):
                self.compare(f"{label} ({i + 1},{j + 1})", a, b)


def _fmt(value: Any) -> Any:
    if isinstance(value, Signature):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_fmt(item) for item in value]
    if isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (Fraction, float, complex)):
        return format_scalar(value)
    return str(value)


def _describe(params: Params, **extra: Any) -> Dict[str, Any]:
    described: Dict[str, Any] = {
        "q": format_scalar(params.q),
        "s": format_scalar(params.s),
    }
    for key, value in extra.items():
        if value is not None:
            described[key] = _fmt(value)
    return described


def _exact_report(check_id: str, tally: _Tally, described: Dict[str, Any]) -> Report:
    detail: Dict[str, Any] = {}
    if tally.failures:
        detail["failures"] = tally.failures[:10]
        logger.error(
            f"{check_id} failed {len(tally.failures)} of {tally.compared} comparisons: "
            f"{', '.join(tally.failures[:3])}"
        )
    return Report(
        id=check_id,
        paper_ref=REFERENCES[check_id],
        kind="exact",
        params=described,
        residual=tally.residual,
        tolerance=0.0 if tally.exact else tally.tolerance,
        passed=not tally.failures,
        diagnostics=Diagnostics(terms=tally.compared, detail=detail),
    )


# Truncated series

@dataclass(frozen=True)
class SeriesSum:
    value: Scalar
    cap: int
    tail_estimate: float
    stabilization_delta: float
    terms: int


def convergence_ratio(us: Sequence[Scalar], vs: Sequence[Scalar], params: Params) -> float:
    """rho = max |xi(u_i) xi(v_j)| over all variable pairs."""

    rho = 0.0
    for u in us:
        for v in vs:
            rho = max(rho, abs(to_complex(params.xi(u) * params.xi(v))))
    return rho


def require_convergent(rho: float) -> None:
    if rho >= 1:
        raise ConvergenceGateError(f"convergence condition violated: rho={rho:.6g} >= 1")


def truncated_series(
    candidates: Callable[[int], Iterable[Signature]],
    term: Callable[[Signature], Scalar],
    rho: float,
    cfg: CheckConfig,
    *,
    floor: int = 0,
    label: str = "series",
) -> SeriesSum:
    """Sum ``term`` over ``candidates(cap)`` with growing caps until the last shell is negligible.

    Stops once the shell added by the latest cap and the geometric tail
    rho^cap |shell| / (1 - rho) are both below tolerance relative to the sum.
    """

    if floor > cfg.max_part_cap:
        raise ValueError(f"maxPartCap {cfg.max_part_cap} is below the boundary part {floor}.")
    cap = max(cfg.truncation_start, floor)
    seen: set = set()
    total: Scalar = Fraction(0)
    first = True
    while True:
        shell: Scalar = Fraction(0)
        for sig in candidates(cap):
            if sig in seen:
                continue
            seen.add(sig)
            value = term(sig)
            if not is_zero(value):
                shell += value
        total += shell
        magnitude = abs(to_complex(shell))
        scale = abs(to_complex(total))
        tail = rho**cap * magnitude / (1 - rho)
        logger.debug(f"{label}: cap={cap} terms={len(seen)} shell={magnitude:.3e} tail={tail:.3e}")
        if not first and magnitude <= cfg.tolerance * scale and tail <= cfg.tolerance * scale:
            return SeriesSum(total, cap, tail, magnitude, len(seen))
        if cap >= cfg.max_part_cap:
            raise TruncationError(
                f"truncation failure: {label} did not stabilize by cap {cap}",
                Diagnostics(
                    cap=cap,
                    tail_estimate=tail,
                    terms=len(seen),
                    stabilization_delta=magnitude,
                ),
            )
        first = False
        cap = min(cfg.next_cap(cap), cfg.max_part_cap)


@dataclass(frozen=True)
class Comparison:
    """Two sides of an identity; ``scale`` is a reference magnitude for sides that vanish."""

    left: Scalar
    right: Scalar
    scale: float = 0.0

    @property
    def magnitude(self) -> float:
        return max(abs(to_complex(self.left)), abs(to_complex(self.right)), self.scale)

    @property
    def residual(self) -> float:
        magnitude = self.magnitude
        gap = abs(to_complex(self.left) - to_complex(self.right))
        return gap / magnitude if magnitude > 0 else gap


def _series_report(
    check_id: str,
    described: Dict[str, Any],
    comparisons: Sequence[Comparison],
    sums: Sequence[SeriesSum],
    cfg: CheckConfig,
    detail: Optional[Dict[str, Any]] = None,
) -> Report:
    residual = max(entry.residual for entry in comparisons)
    scale = min(entry.magnitude for entry in comparisons)
    tail = sum(entry.tail_estimate for entry in sums)
    passed = residual <= cfg.tolerance and tail <= cfg.tolerance * scale
    if not passed:
        logger.error(f"{check_id} failed: residual={residual:.3e} tail={tail:.3e}")
    return Report(
        id=check_id,
        paper_ref=REFERENCES[check_id],
        kind="truncated",
        params=described,
        residual=residual,
        tolerance=cfg.tolerance,
        passed=passed,
        diagnostics=Diagnostics(
            cap=max((entry.cap for entry in sums), default=None),
            tail_estimate=tail,
            terms=sum(entry.terms for entry in sums),
            stabilization_delta=max((entry.stabilization_delta for entry in sums), default=None),
            detail=detail or {},
        ),
    )


def _kernel(us: Sequence[Scalar], vs: Sequence[Scalar], q: Scalar) -> Scalar:
    value: Scalar = Fraction(1)
    for u in us:
        for v in vs:
            denominator = 1 - u * v
            if is_zero(denominator):
                raise PoleError("kernel pole", f"1 - u v, u={u}, v={v}")
            value *= (1 - q * u * v) / denominator
    return value


def _interlacing_below(top: Signature, length: int, cap_by: Signature) -> List[Signature]:
    """kappa of ``length`` with top[i + d] <= kappa[i] <= min(top[i], cap_by[i]), d = len(top) - length."""

    step = len(top) - length
    lower = list(top.parts[step:])
    upper = [min(top[i], cap_by[i]) for i in range(length)]
    if any(lo > hi for lo, hi in zip(lower, upper)):
        return []
    return list(bounded_signatures(lower, upper))


# Truncated identity checks

def check_skew_cauchy_single(
    lam: Signature,
    mu: Signature,
    u: Scalar,
    v: Scalar,
    params: Params,
    cfg: CheckConfig,
) -> Report:
    """sum_nu F_{nu/lam}(u) G^c_{nu/mu}(v) against the finite kappa-sum side."""

    if len(mu) != len(lam) + 1:
        raise SignatureError("skew Cauchy needs len(mu) = len(lam) + 1.")
    rho = convergence_ratio([u], [v], params)
    require_convergent(rho)
    kappas = _interlacing_below(mu, len(lam), lam)
    right = _kernel([u], [v], params.q) * sum(
        (
            skew_g_conjugated(lam, kappa, [v], params) * skew_f(mu, kappa, [u], BASIC, params)
            for kappa in kappas
        ),
        Fraction(0),
    )
    series = truncated_series(
        lambda cap: one_row_image_support(lam, F_ROW, cap),
        lambda nu: skew_f(nu, lam, [u], BASIC, params)
        * skew_g_conjugated(nu, mu, [v], params),
        rho,
        cfg,
        floor=max(lam.largest, mu.largest),
        label="skew-cauchy-single",
    )
    described = _describe(params, **{"lambda": lam, "mu": mu, "u": u, "v": v, "rho": rho})
    return _series_report(
        "skew-cauchy-single",
        described,
        [Comparison(series.value, right)],
        [series],
        cfg,
        {"kappaTerms": len(kappas)},
    )


def check_skew_cauchy(
    lam: Signature,
    mu: Signature,
    us: Sequence[Scalar],
    vs: Sequence[Scalar],
    params: Params,
    cfg: CheckConfig,
) -> Report:
    big_m = len(us)
    if len(mu) != len(lam) + big_m:
        raise SignatureError("skew Cauchy needs len(mu) = len(lam) + len(us).")
    rho = convergence_ratio(us, vs, params)
    require_convergent(rho)
    kappas = _interlacing_below(mu, len(lam), lam)
    right = _kernel(us, vs, params.q) * sum(
        (
            skew_g_conjugated(lam, kappa, vs, params) * skew_f(mu, kappa, us, BASIC, params)
            for kappa in kappas
        ),
        Fraction(0),
    )

    def _candidates(cap: int) -> Iterable[Signature]:
        if mu.largest > cap:
            return []
        return bounded_signatures(list(mu.parts), [cap] * len(mu))

    series = truncated_series(
        _candidates,
        lambda nu: skew_f(nu, lam, us, BASIC, params) * skew_g_conjugated(nu, mu, vs, params),
        rho,
        cfg,
        floor=max(lam.largest, mu.largest),
        label="skew-cauchy",
    )
    described = _describe(params, **{"lambda": lam, "mu": mu, "us": us, "vs": vs, "rho": rho})
    return _series_report(
        "skew-cauchy",
        described,
        [Comparison(series.value, right)],
        [series],
        cfg,
        {"kappaTerms": len(kappas)},
    )


def check_pieri_f(
    mu: Signature, us: Sequence[Scalar], v: Scalar, params: Params, cfg: CheckConfig
) -> Report:
    """prod (1 - q u_i v)/(1 - u_i v) F_mu = sum_nu G^c_{nu/mu}(v) F_nu."""

    if len(us) != len(mu):
        raise SignatureError("Pieri rule for F needs len(us) = len(mu).")
    rho = convergence_ratio(us, [v], params)
    require_convergent(rho)
    f_mu = skew_f(mu, Signature(), us, BASIC, params)
    left = _kernel(us, [v], params.q) * f_mu
    series = truncated_series(
        lambda cap: one_row_image_support(mu, G_ROW, cap),
        lambda nu: skew_g_conjugated(nu, mu, [v], params) * skew_f(nu, Signature(), us, BASIC, params),
        rho,
        cfg,
        floor=mu.largest,
        label="pieri-f",
    )
    detail: Dict[str, Any] = {}
    if not is_zero(f_mu):
        detail["eigenvalueResidual"] = relative_residual(series.value / f_mu, left / f_mu)
    described = _describe(params, mu=mu, us=us, v=v, rho=rho)
    return _series_report("pieri-f", described, [Comparison(left, series.value)], [series], cfg, detail)


def check_pieri_g(
    lam: Signature, u: Scalar, vs: Sequence[Scalar], params: Params, cfg: CheckConfig
) -> Report:
    """prod (1 - q u v_j)/(1 - u v_j) G^c_lam = (1 - s u)/(1 - q^{l+1}) sum_nu F_{nu/lam}(u) G^c_nu."""

    rho = convergence_ratio([u], vs, params)
    require_convergent(rho)
    length = len(lam)
    q, s = params.q, params.s
    left = _kernel([u], vs, q) * skew_g_conjugated(lam, Signature.zeros(length), vs, params)
    zeros = Signature.zeros(length + 1)
    series = truncated_series(
        lambda cap: one_row_image_support(lam, F_ROW, cap),
        lambda nu: skew_f(nu, lam, [u], BASIC, params) * skew_g_conjugated(nu, zeros, vs, params),
        rho,
        cfg,
        floor=lam.largest,
        label="pieri-g",
    )
    right = (1 - s * u) / (1 - power(q, length + 1)) * series.value
    prefactor_row = skew_f(zeros, Signature.zeros(length), [u], BASIC, params)
    described = _describe(params, **{"lambda": lam, "u": u, "vs": vs, "rho": rho})
    return _series_report(
        "pieri-g",
        described,
        [
            Comparison(left, right),
            Comparison(prefactor_row, (1 - power(q, length + 1)) / (1 - s * u)),
        ],
        [series],
        cfg,
    )


def check_cauchy(
    us: Sequence[Scalar], vs: Sequence[Scalar], params: Params, cfg: CheckConfig
) -> Report:
    """prod (1 - s u_i)/(q;q)_M sum_nu F_nu(U) G^c_nu(V) = prod (1 - q u_i v_j)/(1 - u_i v_j)."""

    big_m = len(us)
    rho = convergence_ratio(us, vs, params)
    require_convergent(rho)
    q, s = params.q, params.s
    zeros = Signature.zeros(big_m)
    series = truncated_series(
        lambda cap: enumerate_signatures(big_m, cap),
        lambda nu: skew_f(nu, Signature(), us, BASIC, params)
        * skew_g_conjugated(nu, zeros, vs, params),
        rho,
        cfg,
        label="cauchy",
    )
    prefactor: Scalar = Fraction(1)
    for u in us:
        prefactor *= 1 - s * u
    left = prefactor / q_pochhammer(q, q, big_m) * series.value
    right = _kernel(us, vs, q)
    described = _describe(params, us=us, vs=vs, rho=rho)
    return _series_report("cauchy", described, [Comparison(left, right)], [series], cfg)


def check_cauchy_companions(
    lam: Signature,
    mu: Signature,
    u: Scalar,
    v: Scalar,
    params: Params,
    cfg: CheckConfig,
) -> Report:
    """The two identities read off the (2,2) and (3,2) cross-conjugated matrix elements."""

    if len(lam) != len(mu):
        raise SignatureError("Companion identities need len(lam) = len(mu).")
    rho = convergence_ratio([u], [v], params)
    require_convergent(rho)
    q = params.q
    uv = u * v
    length = len(lam)

    def _g_pair(nu: Signature) -> Scalar:
        return skew_g(nu, lam, [u], BASIC, params) * skew_g_conjugated(nu, mu, [v], params)

    def _f_pair(nu: Signature) -> Scalar:
        return skew_f(nu, lam, [u], BASIC, params) * skew_f_conjugated(nu, mu, [v], params)

    floor = max(lam.largest, mu.largest)
    g_series = truncated_series(
        lambda cap: one_row_image_support(lam, G_ROW, cap), _g_pair, rho, cfg,
        floor=floor, label="companion G-sum",
    )
    f_series = truncated_series(
        lambda cap: one_row_image_support(lam, F_ROW, cap), _f_pair, rho, cfg,
        floor=floor, label="companion F-sum",
    )

    if length:
        lower = list(mu.parts[1:]) + [0]
        upper = [min(mu[i], lam[i]) for i in range(length)]
        g_kappas = list(bounded_signatures(lower, upper))
    else:
        g_kappas = [Signature()]
    g_left = (1 - q * uv) * (q - uv) * sum(
        (
            skew_g(mu, kappa, [u], BASIC, params) * skew_g_conjugated(lam, kappa, [v], params)
            for kappa in g_kappas
        ),
        Fraction(0),
    )
    g_right = q * (1 - uv) ** 2 * g_series.value - (1 - q) * uv * (1 - uv) * f_series.value

    f_kappas = _interlacing_below(mu, length - 1, lam) if length else []
    f_left = (1 - q * uv) * (q - uv) * sum(
        (
            skew_f(mu, kappa, [u], BASIC, params) * skew_f_conjugated(lam, kappa, [v], params)
            for kappa in f_kappas
        ),
        Fraction(0),
    )
    f_right = (1 - uv) ** 2 * f_series.value - (1 - q) * (1 - uv) * g_series.value

    # With no kappa terms the F-companion has a vanishing left side; measure it
    # against the size of the two series it cancels.
    g_side = Comparison(g_left, g_right)
    f_side = Comparison(
        f_left,
        f_right,
        scale=max(
            abs(to_complex((1 - uv) ** 2 * f_series.value)),
            abs(to_complex((1 - q) * (1 - uv) * g_series.value)),
        ),
    )
    described = _describe(params, **{"lambda": lam, "mu": mu, "u": u, "v": v, "rho": rho})
    return _series_report(
        "cauchy-companions",
        described,
        [g_side, f_side],
        [g_series, f_series],
        cfg,
        {"gResidual": g_side.residual, "fResidual": f_side.residual},
    )


EIGENRELATION_TOLERANCE = 1e-8


def check_fused_eigenrelation(
    mu: Signature,
    us: Sequence[Scalar],
    v: Scalar,
    t: Scalar,
    params: Params,
    cfg: CheckConfig,
) -> Report:
    """prod (1 - t u_i v)/(1 - u_i v) F_mu = sum_nu c(nu)/c(mu) G_{nu/mu}(v; t) F_nu."""

    if len(us) != len(mu):
        raise SignatureError("The fused eigenrelation needs len(us) = len(mu).")
    cfg = cfg.model_copy(update={"tolerance": max(cfg.tolerance, EIGENRELATION_TOLERANCE)})
    rho = convergence_ratio(us, [v], params)
    require_convergent(rho)
    family = fused_family(t)
    left = skew_f(mu, Signature(), us, BASIC, params)
    for u in us:
        denominator = 1 - u * v
        if is_zero(denominator):
            raise PoleError("kernel pole", f"1 - u v, u={u}, v={v}")
        left *= (1 - t * u * v) / denominator
    series = truncated_series(
        lambda cap: one_row_image_support(mu, G_ROW, cap, family),
        lambda nu: skew_g_conjugated(nu, mu, [v], params, family=family)
        * skew_f(nu, Signature(), us, BASIC, params),
        rho,
        cfg,
        floor=mu.largest,
        label="fused-eigenrelation",
    )
    described = _describe(params, mu=mu, us=us, v=v, t=t, rho=rho)
    return _series_report(
        "fused-eigenrelation", described, [Comparison(left, series.value)], [series], cfg
    )


# Exact checks

def _signature(inputs: Mapping[str, Any], key: str, default: Signature) -> Signature:
    value = inputs.get(key)
    if value is None:
        return default
    if isinstance(value, Signature):
        return value
    if isinstance(value, str):
        return Signature.parse(value)
    return Signature(tuple(value))


def _points(inputs: Mapping[str, Any], key: str, count: int) -> List[Scalar]:
    values = list(inputs.get(key) or [])
    if len(values) < count:
        raise ValueError(f"{key} needs at least {count} values, got {len(values)}.")
    return values


def _signatures_up_to(max_length: int, max_part: int, *, min_length: int = 1) -> Iterable[Signature]:
    for length in range(min_length, max_length + 1):
        yield from enumerate_signatures(length, max_part)


def _grid(cfg: CheckConfig) -> Tuple[int, int]:
    """Length and part bounds for exhaustive exact checks, exactly as configured."""

    return cfg.max_length, cfg.max_part


def _transfer_boundaries(cfg: CheckConfig) -> Iterable[Tuple[Signature, Signature]]:
    part = min(cfg.max_part, 2)
    for bottom_length in range(2):
        for bottom in enumerate_signatures(bottom_length, part):
            for top_length in range(bottom_length, bottom_length + 3):
                for top in enumerate_signatures(top_length, part):
                    yield bottom, top


def check_yang_baxter(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    u1, u2 = _points(inputs, "us", 2)[:2]
    cross = cross_matrix(u1, u2, params.q)
    tally = _Tally(cfg.tolerance)
    for m in range(5):
        for n in range(5):
            left = matmul(cross, two_vertex_matrix(u1, u2, m, n, params))
            right = matmul(twisted_two_vertex_matrix(u2, u1, m, n, params), cross)
            tally.compare_matrices(f"m={m} n={n}", left, right)
    return _exact_report("yang-baxter", tally, _describe(params, u1=u1, u2=u2))


def check_cross_conjugation(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    u1, u2 = _points(inputs, "us", 2)[:2]
    q = params.q
    denominator = u2 - q * u1
    if is_zero(denominator):
        raise PoleError("cross matrix singular", f"u2 - q u1, u1={u1}, u2={u2}")
    tally = _Tally(cfg.tolerance)
    for bottom, top in _transfer_boundaries(cfg):
        plain = two_row_transfer(bottom, top, u1, u2, params)
        twisted = two_row_transfer(bottom, top, u1, u2, params, twisted=True)
        label = f"[{bottom}]->[{top}]"
        tally.compare(f"{label} (1,1)", twisted[0][0], plain[0][0])
        tally.compare(f"{label} (4,1)", twisted[3][0], plain[3][0])
        combined = (u2 - u1) / denominator * plain[3][1] + (1 - q) * u2 / denominator * plain[3][2]
        tally.compare(f"{label} (4,2)", twisted[3][1], combined)
    return _exact_report("cross-conjugation", tally, _describe(params, u1=u1, u2=u2))


def check_transfer_conjugation(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    u1, u2 = _points(inputs, "us", 2)[:2]
    cross = cross_matrix(u1, u2, params.q)
    cross_inverse = inverse(cross, kind="cross matrix singular")
    tally = _Tally(cfg.tolerance)
    for bottom, top in _transfer_boundaries(cfg):
        plain = two_row_transfer(bottom, top, u1, u2, params)
        twisted = two_row_transfer(bottom, top, u1, u2, params, twisted=True)
        tally.compare_matrices(
            f"[{bottom}]->[{top}]", twisted, matmul(cross, plain, cross_inverse)
        )
    return _exact_report("transfer-conjugation", tally, _describe(params, u1=u1, u2=u2))


def check_two_row_transfer(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    u1, u2 = _points(inputs, "us", 2)[:2]
    tally = _Tally(cfg.tolerance)
    for bottom, top in _transfer_boundaries(cfg):
        matrix = two_row_transfer(bottom, top, u1, u2, params)
        label = f"[{bottom}]->[{top}]"
        if len(top) == len(bottom) + 2:
            tally.compare(f"F {label}", matrix[3][0], skew_f(top, bottom, [u1, u2], BASIC, params))
        elif len(top) == len(bottom):
            tally.compare(f"G {label}", matrix[0][0], skew_g(top, bottom, [u1, u2], BASIC, params))
    return _exact_report("two-row-transfer", tally, _describe(params, u1=u1, u2=u2))


def check_weight_support(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    u = _points(inputs, "us", 1)[0]
    t = inputs.get("t", params.q * params.q)
    zeta = inputs.get("zeta")
    families = [BASIC, CONJUGATED, fused_family(t), q_hahn_family(t)]
    for name in DEGENERATE_FAMILIES:
        if name == "rational" and zeta is None:
            continue
        families.append(degenerate_family(name, zeta if name == "rational" else None))
    tally = _Tally(cfg.tolerance)
    for family in families:
        bound = 6 if family.capacity == 1 else 4
        violations = off_support_violations(family, u, params, bound)
        tally.expect(f"{family.name} off support at {violations[:1]}", not violations)
    return _exact_report("weight-support", tally, _describe(params, u=u, t=t, zeta=zeta))


def check_gauge_invariance(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    u = _points(inputs, "us", 1)[0]
    t = inputs.get("t", params.q * params.q)
    rng = random.Random(cfg.seed)
    gauge = {j: random_rational(rng, settings.bound) for j in range(8)}
    entering = gauge[1] / gauge[0]
    fused = fused_family(t)
    pairs = [
        (BASIC, gauged_family(BASIC, gauge)),
        (fused, gauged_family(fused, gauge)),
    ]
    max_length, max_part = _grid(cfg)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(min(max_length, 2), max_part, min_length=0):
        cap = mu.largest + 2
        for base, gauged in pairs:
            for nu in one_row_image_support(mu, G_ROW, cap, base):
                row = RowBoundary(mu, nu, G_ROW)
                tally.compare(
                    f"{base.name} G-row [{mu}]->[{nu}]",
                    one_row_weight(row, u, gauged, params),
                    one_row_weight(row, u, base, params),
                )
        for nu in one_row_image_support(mu, F_ROW, cap):
            row = RowBoundary(mu, nu, F_ROW)
            tally.compare(
                f"F-row [{mu}]->[{nu}]",
                one_row_weight(row, u, pairs[0][1], params),
                entering * one_row_weight(row, u, BASIC, params),
            )
    return _exact_report("gauge-invariance", tally, _describe(params, u=u, t=t))


def check_cross_method(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)
    vs = _points(inputs, "vs", max_length)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = us[: len(mu)]
        tally.compare(
            f"F [{mu}]",
            skew_f(mu, Signature(), points, BASIC, params),
            f_symmetrized(mu, points, params),
        )
    for nu in _signatures_up_to(max_length, max_part):
        zeros = Signature.zeros(len(nu))
        for big_n in range(1, max_length + 1):
            points = vs[:big_n]
            lattice = skew_g(nu, zeros, points, BASIC, params)
            tally.compare(
                f"G [{nu}] N={big_n} subset",
                lattice,
                g_symmetrized(nu, points, params, subset_form=True),
            )
            if big_n >= len(nu) - nu.zero_count:
                tally.compare(f"G [{nu}] N={big_n}", lattice, g_symmetrized(nu, points, params))
    return _exact_report("cross-method", tally, _describe(params, us=us, vs=vs))


def _adjacent_swaps(points: Sequence[Scalar]) -> Iterator[Tuple[int, List[Scalar]]]:
    for i in range(len(points) - 1):
        swapped = list(points)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        yield i, swapped


def check_symmetry(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    """Every adjacent transposition of the spectral variables leaves F and G unchanged."""

    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)[:max_length]
    vs = _points(inputs, "vs", max_length)[:max_length]
    tally = _Tally(cfg.tolerance)
    for big_n in range(2, max_length + 1):
        points = us[:big_n]
        for lam in _signatures_up_to(max_length, max_part, min_length=big_n):
            mu = Signature.zeros(len(lam) - big_n)
            value = skew_f(lam, mu, points, BASIC, params)
            for i, swapped in _adjacent_swaps(points):
                tally.compare(
                    f"F [{lam}]/[{mu}] N={big_n} swap {i},{i + 1}",
                    skew_f(lam, mu, swapped, BASIC, params),
                    value,
                )
    for big_n in range(2, max_length + 1):
        points = vs[:big_n]
        for lam in _signatures_up_to(max_length, max_part):
            nu = Signature.zeros(len(lam))
            value = skew_g(lam, nu, points, BASIC, params)
            for i, swapped in _adjacent_swaps(points):
                tally.compare(
                    f"G [{lam}] N={big_n} swap {i},{i + 1}",
                    skew_g(lam, nu, swapped, BASIC, params),
                    value,
                )
    return _exact_report("symmetry", tally, _describe(params, us=us, vs=vs))


def check_branching(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    """F_{lam/mu}(U, U') = sum_kappa F_{kappa/mu}(U) F_{lam/kappa}(U'), and likewise for G.

    Every split point of every variable list up to ``max_length`` is tried. F runs over
    lam/0^M with M in {0, 1}, G over lam/0^L.
    """

    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)[:max_length]
    vs = _points(inputs, "vs", max_length)[:max_length]
    tally = _Tally(cfg.tolerance)
    for length in range(2, max_length + 1):
        for big_n in (length, length - 1):
            if big_n < 2:
                continue
            points = us[:big_n]
            mu = Signature.zeros(length - big_n)
            for split in range(1, big_n):
                lower: Dict[Signature, Scalar] = {}
                for lam in enumerate_signatures(length, max_part):
                    total: Scalar = Fraction(0)
                    for kappa in bounded_signatures(
                        [0] * (len(mu) + split), list(lam.parts[: len(mu) + split])
                    ):
                        if kappa not in lower:
                            lower[kappa] = skew_f(kappa, mu, points[:split], BASIC, params)
                        if not is_zero(lower[kappa]):
                            total += lower[kappa] * skew_f(
                                lam, kappa, points[split:], BASIC, params
                            )
                    tally.compare(
                        f"F [{lam}]/[{mu}] split {split}|{big_n - split}",
                        skew_f(lam, mu, points, BASIC, params),
                        total,
                    )
    for big_n in range(2, max_length + 1):
        points = vs[:big_n]
        for length in range(1, max_length + 1):
            nu = Signature.zeros(length)
            for split in range(1, big_n):
                lower = {}
                for lam in enumerate_signatures(length, max_part):
                    total = Fraction(0)
                    for kappa in bounded_signatures(list(nu.parts), list(lam.parts)):
                        if kappa not in lower:
                            lower[kappa] = skew_g(kappa, nu, points[:split], BASIC, params)
                        if not is_zero(lower[kappa]):
                            total += lower[kappa] * skew_g(
                                lam, kappa, points[split:], BASIC, params
                            )
                    tally.compare(
                        f"G [{lam}] split {split}|{big_n - split}",
                        skew_g(lam, nu, points, BASIC, params),
                        total,
                    )
    return _exact_report("branching", tally, _describe(params, us=us, vs=vs))


def check_shift(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    """F_{mu + r}(U) = prod xi(u_i)^r F_mu(U)."""

    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max(max_part - 1, 0)):
        points = us[: len(mu)]
        base = skew_f(mu, Signature(), points, BASIC, params)
        for r in (1, 2):
            factor: Scalar = Fraction(1)
            for u in points:
                factor *= power(params.xi(u), r)
            tally.compare(
                f"[{mu}]+{r}",
                skew_f(mu.shifted(r), Signature(), points, BASIC, params),
                factor * base,
            )
    return _exact_report("shift", tally, _describe(params, us=us))


def check_g_via_f(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    max_length, max_part = _grid(cfg)
    vs = _points(inputs, "vs", max_length)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        if mu.zero_count:
            continue
        points = vs[: len(mu)]
        prefactor = g_via_f_prefactor(mu, points, params)
        lowered = mu.shifted(-1)
        tally.compare(
            f"lattice [{mu}]",
            skew_g(mu, Signature.zeros(len(mu)), points, BASIC, params),
            prefactor * skew_f(lowered, Signature(), points, BASIC, params),
        )
        tally.compare(
            f"symmetrized [{mu}]",
            g_symmetrized(mu, points, params),
            prefactor * f_symmetrized(lowered, points, params),
        )
    return _exact_report("g-via-f", tally, _describe(params, vs=vs))


def check_stability(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    max_length, max_part = _grid(cfg)
    vs = _points(inputs, "vs", max_length)
    extended = vs + [Fraction(0)]
    tally = _Tally(cfg.tolerance)
    for nu in _signatures_up_to(max_length, max_part):
        zeros = Signature.zeros(len(nu))
        tally.compare(
            f"lattice [{nu}]",
            skew_g(nu, zeros, extended, BASIC, params),
            skew_g(nu, zeros, vs, BASIC, params),
        )
        tally.compare(
            f"subset form [{nu}]",
            g_symmetrized(nu, extended, params, subset_form=True),
            g_symmetrized(nu, vs, params, subset_form=True),
        )
    return _exact_report("stability", tally, _describe(params, vs=vs))


def check_conjugation(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    _, max_part = _grid(cfg)
    us = _points(inputs, "us", 2)[:2]
    vs = _points(inputs, "vs", 2)[:2]
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(1, max_part, min_length=0):
        for lam in enumerate_signatures(len(mu) + 2, max_part):
            tally.compare(
                f"F [{lam}]/[{mu}]",
                skew_f_conjugated(lam, mu, us, params),
                skew_f_conjugated(lam, mu, us, params, via_weights=True),
            )
    for nu in _signatures_up_to(2, 1):
        for lam in bounded_signatures(list(nu.parts), [max_part] * len(nu)):
            tally.compare(
                f"G [{lam}]/[{nu}]",
                skew_g_conjugated(lam, nu, vs, params),
                skew_g_conjugated(lam, nu, vs, params, via_weights=True),
            )
    return _exact_report("conjugation", tally, _describe(params, us=us, vs=vs))


def check_principal(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    max_length, max_part = _grid(cfg)
    u = _points(inputs, "us", 1)[0]
    v = _points(inputs, "vs", 1)[0]
    q = params.q
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        tally.compare(
            f"F [{mu}]",
            f_principal(mu, u, params),
            skew_f(mu, Signature(), principal_points(u, len(mu), q), BASIC, params),
        )
    for nu in _signatures_up_to(max_length, max_part):
        zeros = Signature.zeros(len(nu))
        for big_n in range(1, max_length + 1):
            tally.compare(
                f"G [{nu}] N={big_n}",
                g_principal(nu, v, big_n, params),
                skew_g(nu, zeros, principal_points(v, big_n, q), BASIC, params),
            )
    return _exact_report("principal", tally, _describe(params, u=u, v=v))


def check_fused_row_stack(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    """J basic rows at v, qv, ..., q^{J-1} v against one fused row with t = q^J."""

    _, max_part = _grid(cfg)
    v = _points(inputs, "vs", 1)[0]
    q = params.q
    tally = _Tally(cfg.tolerance)
    for level in range(1, 4):
        family = fused_family(power(q, level))
        points = principal_points(v, level, q)
        for mu in _signatures_up_to(2, min(max_part, 2)):
            for nu in bounded_signatures(list(mu.parts), [max_part] * len(mu)):
                tally.compare(
                    f"J={level} [{nu}]/[{mu}]",
                    skew_g(nu, mu, points, BASIC, params),
                    skew_g(nu, mu, [v], family, params),
                )
    return _exact_report("fused-row-stack", tally, _describe(params, v=v))


def _lagrange(nodes: Sequence[Scalar], values: Sequence[Scalar], point: Scalar) -> Scalar:
    total: Scalar = Fraction(0)
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        term = yi
        for j, xj in enumerate(nodes):
            if j != i:
                term *= (point - xj) / (xi - xj)
        total += term
    return total


def check_fused_polynomial(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    """Interpolate each fused weight in t through i1 + 2 nodes and compare at a fresh t."""

    v = _points(inputs, "vs", 1)[0]
    t = inputs.get("t", params.q * params.q)
    tally = _Tally(cfg.tolerance)
    for i1 in range(1, 4):
        nodes = [t + k + 1 for k in range(i1 + 2)]
        for j1 in range(4):
            for i2 in range(4):
                j2 = i1 + j1 - i2
                if j2 < 0:
                    continue
                vertex = VertexConfig(i1, j1, i2, j2)
                values = [fused_weight(v, node, vertex, params) for node in nodes]
                tally.compare(
                    str(vertex), _lagrange(nodes, values, t), fused_weight(v, t, vertex, params)
                )
    return _exact_report("fused-polynomial", tally, _describe(params, v=v, t=t))


def check_fused_principal(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    _, max_part = _grid(cfg)
    v = _points(inputs, "vs", 1)[0]
    tally = _Tally(cfg.tolerance)
    for big_n in range(1, 4):
        family = fused_family(power(params.q, big_n))
        for nu in _signatures_up_to(2, max_part):
            tally.compare(
                f"N={big_n} [{nu}]",
                skew_g(nu, Signature.zeros(len(nu)), [v], family, params),
                g_principal(nu, v, big_n, params),
            )
    return _exact_report("fused-principal", tally, _describe(params, v=v))


def check_qhahn_row(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    _, max_part = _grid(cfg)
    t = inputs.get("t", params.q * params.q)
    s = params.s
    q_hahn, fused = q_hahn_family(t), fused_family(t)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(2, min(max_part, 2), min_length=0):
        for nu in bounded_signatures(list(mu.parts), [mu.largest + 2] * len(mu)):
            row = RowBoundary(mu, nu, G_ROW)
            tally.compare(
                f"[{mu}]->[{nu}]",
                one_row_weight(row, s, q_hahn, params),
                one_row_weight(row, s, fused, params),
            )
    return _exact_report("qhahn-row", tally, _describe(params, t=t))


def check_qhahn_support(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    _, max_part = _grid(cfg)
    t = inputs.get("t", params.q * params.q)
    s = params.s
    q_hahn, fused = q_hahn_family(t), fused_family(t)
    tally = _Tally(cfg.tolerance)
    violations = off_support_violations(q_hahn, s, params, bound=5)
    tally.expect(f"raw q-Hahn kernel off support at {violations[:1]}", not violations)
    for i1 in range(5):
        for j1 in range(5):
            for i2 in range(j1):
                vertex = VertexConfig(i1, j1, i2, i1 + j1 - i2)
                tally.expect(f"{vertex} supported", not q_hahn_support(vertex))
    for mu in _signatures_up_to(3, max_part):
        for i in range(len(mu)):
            parts = list(mu.parts)
            parts[i] += 2
            if i and parts[i] > mu[i - 1]:
                continue
            row = RowBoundary(mu, Signature(tuple(parts)), G_ROW)
            tally.compare(f"q-Hahn [{mu}] move at {i}", one_row_weight(row, s, q_hahn, params), 0)
            tally.compare(f"fused [{mu}] move at {i}", one_row_weight(row, s, fused, params), 0)
    return _exact_report("qhahn-support", tally, _describe(params, t=t))


def check_qhahn_eigenvalue(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    """(1 - t u s)/(1 - u s) = (1 - t s^2)/(1 - s^2) + (t - 1) s/(1 - s^2) (s - u)/(1 - u s)."""

    us = _points(inputs, "us", 1)
    t = inputs.get("t", params.q * params.q)
    s = params.s
    tally = _Tally(cfg.tolerance)
    for u in us:
        tally.compare(
            f"u={format_scalar(u)}",
            (1 - t * u * s) / (1 - u * s),
            (1 - t * s * s) / (1 - s * s) + (t - 1) * s / (1 - s * s) * (s - u) / (1 - u * s),
        )
    return _exact_report("qhahn-eigenvalue", tally, _describe(params, us=us, t=t))


def check_degeneration_hl(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)
    vs = _points(inputs, "vs", max_length)
    q = params.q
    at_zero = Params.create(q, 0, depth=params.depth, relax=("s=0",))
    family = degenerate_family("hl-s0")
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = us[: len(mu)]
        lattice = skew_f(mu, Signature(), points, family, params)
        tally.compare(
            f"F [{mu}] vs P",
            lattice,
            hl_dictionary_factor(mu, q, include_zero=True) * hall_littlewood_p(mu, points, q),
        )
        tally.compare(f"F [{mu}] vs s=0 symmetrization", lattice, f_symmetrized(mu, points, at_zero))
    for nu in _signatures_up_to(max_length, max_part):
        zeros = Signature.zeros(len(nu))
        lattice = skew_g(nu, zeros, vs, family, params)
        tally.compare(f"G [{nu}] vs Q", lattice, hall_littlewood_q(nu, vs, q))
        tally.compare(f"G [{nu}] vs s=0 symmetrization", lattice, g_symmetrized(nu, vs, at_zero))
    return _exact_report("degeneration-hl", tally, _describe(params, us=us, vs=vs))


def check_degeneration_inhom_hl(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, max_part = _grid(cfg)
    zs = _points(inputs, "us", max_length)
    ws = _points(inputs, "vs", max_length)
    q = params.q
    family = degenerate_family("inhom-hl")
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = zs[: len(mu)]
        tally.compare(
            f"F [{mu}]",
            skew_f(mu, Signature(), points, family, params),
            inhom_f_symmetrized(mu, points, q),
        )
    for nu in _signatures_up_to(max_length, max_part):
        tally.compare(
            f"G [{nu}]",
            skew_g(nu, Signature.zeros(len(nu)), ws, family, params),
            inhom_g_symmetrized(nu, ws, q),
        )
    return _exact_report("degeneration-inhom-hl", tally, _describe(params, zs=zs, ws=ws))


def check_degeneration_schur(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, max_part = _grid(cfg)
    us = _points(inputs, "us", max_length)
    vs = _points(inputs, "vs", max_length)
    at_zero = Params.create(0, params.s, depth=params.depth, relax=("q=0",))
    family = degenerate_family("schur-q0")
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = us[: len(mu)]
        lattice = skew_f(mu, Signature(), points, family, params)
        tally.compare(f"F [{mu}] det", lattice, schur_like_determinant("F-q0", mu, points, params))
        tally.compare(f"F [{mu}] symmetrized", lattice, f_symmetrized(mu, points, at_zero))
    for nu in _signatures_up_to(max_length, max_part, min_length=0):
        lattice = skew_g(nu, Signature.zeros(len(nu)), vs, family, params)
        tally.compare(f"G [{nu}] det", lattice, schur_like_determinant("G-q0", nu, vs, params))
        tally.compare(f"G [{nu}] symmetrized", lattice, g_symmetrized(nu, vs, at_zero))
    return _exact_report("degeneration-schur", tally, _describe(params, us=us, vs=vs))


def check_degeneration_inhom_schur(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, max_part = _grid(cfg)
    zs = _points(inputs, "us", max_length)
    ws = _points(inputs, "vs", max_length)
    family = degenerate_family("inhom-schur")
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = zs[: len(mu)]
        lattice = skew_f(mu, Signature(), points, family, params)
        tally.compare(f"F [{mu}] det", lattice, schur_like_determinant("F-inhom", mu, points, params))
        tally.compare(f"F [{mu}] symmetrized", lattice, inhom_f_symmetrized(mu, points, 0))
    for nu in _signatures_up_to(max_length, max_part):
        lattice = skew_g(nu, Signature.zeros(len(nu)), ws, family, params)
        tally.compare(f"G [{nu}] det", lattice, schur_like_determinant("G-inhom", nu, ws, params))
        tally.compare(f"G [{nu}] symmetrized", lattice, inhom_g_symmetrized(nu, ws, 0))
    return _exact_report("degeneration-inhom-schur", tally, _describe(params, zs=zs, ws=ws))


def check_degeneration_rational(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, max_part = _grid(cfg)
    xs = _points(inputs, "us", max_length)
    ys = _points(inputs, "vs", max_length)
    zeta = inputs["zeta"]
    family = degenerate_family("rational", zeta)
    tally = _Tally(cfg.tolerance)
    for mu in _signatures_up_to(max_length, max_part):
        points = xs[: len(mu)]
        tally.compare(
            f"F [{mu}]",
            skew_f(mu, Signature(), points, family, params),
            rational_limit_f(mu, points, zeta),
        )
    for nu in _signatures_up_to(max_length, max_part):
        tally.compare(
            f"G [{nu}]",
            skew_g(nu, Signature.zeros(len(nu)), ys, family, params),
            rational_limit_g(nu, ys, zeta),
        )
    return _exact_report("degeneration-rational", tally, _describe(params, xs=xs, ys=ys, zeta=zeta))


def check_symmetrization_identity(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, _ = _grid(cfg)
    zs = _points(inputs, "us", max_length + 1)
    tally = _Tally(cfg.tolerance)
    for p in range(1, max_length + 2):
        tally.compare(
            f"p={p}", symmetrization_sum(zs[:p], params.q), symmetrization_constant(p, params.q)
        )
    return _exact_report("symmetrization-identity", tally, _describe(params, zs=zs))


def check_residue_identity(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    max_length, _ = _grid(cfg)
    us = _points(inputs, "us", max_length + 1)
    u_last = _points(inputs, "vs", 1)[0]
    while u_last in us:
        u_last += 1
    tally = _Tally(cfg.tolerance)
    for c1 in range(1, max_length + 2):
        report = residue_identity_check(c1, us[:c1], u_last, params.q, cfg.tolerance)
        tally.expect(f"c1={c1}", report.passed)
        tally.residual = max(tally.residual, report.residual)
    return _exact_report("residue-identity", tally, _describe(params, us=us, uM=u_last))


# Numeric limits

def _limit_report(
    check_id: str,
    described: Dict[str, Any],
    residuals: Sequence[float],
    passed: bool,
    detail: Dict[str, Any],
) -> Report:
    residual = residuals[-1] if residuals else 0.0
    if not passed:
        logger.error(f"{check_id} failed: residuals {residuals}")
    return Report(
        id=check_id,
        paper_ref=REFERENCES[check_id],
        kind="truncated",
        params=described,
        residual=residual,
        tolerance=LIMIT_TOLERANCE,
        passed=passed,
        diagnostics=Diagnostics(points=len(residuals), detail=detail),
    )


def check_rational_limit(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    """q = e^eps, s = e^{eps zeta}, u = e^{eps x} sends F and G to the rational functions."""

    mu = _signature(inputs, "mu", Signature.of(1, 0))
    nu = _signature(inputs, "nu", Signature.of(2, 0))
    xs = _points(inputs, "us", len(mu))[: len(mu)]
    ys = _points(inputs, "vs", 1)
    zeta = inputs["zeta"]
    eps = LIMIT_EPSILON
    numeric = Params.create(
        complex(math.exp(eps)), complex(math.exp(eps * float(zeta))), depth=params.depth
    )

    def _lift(points: Sequence[Scalar]) -> List[complex]:
        return [complex(math.exp(eps * float(x))) for x in points]

    f_value = skew_f(mu, Signature(), _lift(xs), BASIC, numeric)
    g_value = skew_g(nu, Signature.zeros(len(nu)), _lift(ys), BASIC, numeric)
    residuals = [
        relative_residual(f_value, rational_limit_f(mu, xs, zeta)),
        relative_residual(g_value, rational_limit_g(nu, ys, zeta)),
    ]
    worst = max(residuals)
    described = _describe(params, mu=mu, nu=nu, xs=xs, ys=ys, zeta=zeta, epsilon=str(eps))
    return _limit_report(
        "rational-limit",
        described,
        [worst],
        worst <= LIMIT_TOLERANCE,
        {"fResidual": residuals[0], "gResidual": residuals[1]},
    )


def check_inhom_limit(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    """s^{-|lam|} F_lam(s z) and s^{-|nu|} G_nu(s w) approach the inhomogeneous lattice."""

    mu = _signature(inputs, "mu", Signature.of(2, 1))
    nu = _signature(inputs, "nu", Signature.of(1, 0))
    zs = _points(inputs, "us", len(mu))[: len(mu)]
    ws = _points(inputs, "vs", 1)
    q = params.q
    family = degenerate_family("inhom-hl")
    target_f = skew_f(mu, Signature(), zs, family, params)
    target_g = skew_g(nu, Signature.zeros(len(nu)), ws, family, params)
    residuals: List[float] = []
    for exponent in range(3, 7):
        s = Fraction(1, 10**exponent)
        scaled = Params.create(q, s, depth=params.depth)
        f_value = skew_f(mu, Signature(), [s * z for z in zs], BASIC, scaled) / s**mu.size
        g_value = (
            skew_g(nu, Signature.zeros(len(nu)), [s * w for w in ws], BASIC, scaled) / s**nu.size
        )
        residuals.append(
            max(relative_residual(f_value, target_f), relative_residual(g_value, target_g))
        )
    shrinking = all(later <= earlier for earlier, later in zip(residuals, residuals[1:]))
    passed = shrinking and residuals[-1] <= LIMIT_TOLERANCE
    described = _describe(params, mu=mu, nu=nu, zs=zs, ws=ws)
    return _limit_report(
        "inhom-limit", described, residuals, passed, {"residuals": residuals, "shrinking": shrinking}
    )


# Quadrature checks

def _quadrature_report(
    check_id: str,
    described: Dict[str, Any],
    result: QuadratureResult,
    expected: Scalar,
    tolerance: float,
) -> Report:
    if is_zero(expected):
        residual = abs(result.value)
    else:
        residual = relative_residual(result.value, expected)
    passed = residual <= tolerance
    if not passed:
        logger.error(f"{check_id} failed: residual={residual:.3e} nodes={result.node_count}")
    return Report(
        id=check_id,
        paper_ref=REFERENCES[check_id],
        kind="quadrature",
        params=described,
        residual=residual,
        tolerance=tolerance,
        passed=passed,
        diagnostics=Diagnostics(
            node_count=result.node_count,
            last_delta=result.last_delta,
            detail={"value": format_scalar(result.value), "expected": format_scalar(expected)},
        ),
    )


def check_spatial_orthogonality(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    mu = _signature(inputs, "mu", Signature.of(0))
    nu = _signature(inputs, "nu", Signature.of(0))
    tolerance = SPATIAL_TOLERANCE[len(nu)]
    result = spatial_orthogonality(
        mu, nu, params, tol=min(cfg.quadrature_tolerance, tolerance / 10)
    )
    expected = Fraction(1) if mu == nu else Fraction(0)
    return _quadrature_report(
        "spatial-orthogonality", _describe(params, mu=mu, nu=nu), result, expected, tolerance
    )


def check_spatial_coefficient(
    params: Params, inputs: Mapping[str, Any], cfg: CheckConfig
) -> Report:
    nu = _signature(inputs, "nu", Signature.of(0))
    vs = _points(inputs, "vs", 1)
    tolerance = SPATIAL_TOLERANCE[len(nu)]
    result = spatial_check_integral(
        nu, vs, params, tol=min(cfg.quadrature_tolerance, tolerance / 10)
    )
    expected = g_symmetrized(nu, vs, params, subset_form=True)
    return _quadrature_report(
        "spatial-check", _describe(params, nu=nu, vs=vs), result, expected, tolerance
    )


# Sampling

SKEW_CAUCHY_SINGLE_CASES = (((), (0,)), ((1,), (2, 0)), ((0,), (1, 0)))
SKEW_CAUCHY_CASES = (((), (0, 0)), ((), (1, 0)), ((0,), (1, 0, 0)))
PIERI_F_CASES = ((0,), (1,), (0, 0), (2, 1))
PIERI_G_CASES = (((), 1), ((1,), 2), ((1, 0), 1))
CAUCHY_CASES = ((0, 1), (1, 1), (2, 1), (1, 2))
COMPANION_CASES = (((), ()), ((0,), (0,)), ((1,), (0,)), ((1, 0), (1, 1)))
EIGENRELATION_CASES = ((0,), (1,), (1, 0))
SPATIAL_CASES = (((0,), (0,)), ((1,), (0,)), ((2,), (2,)), ((1, 0), (1, 0)), ((2, 0), (1, 1)))
SPATIAL_CHECK_CASES = (((0,), 1), ((2,), 1), ((1, 1), 2), ((1, 0), 2))


def _point_seed(cfg: CheckConfig, seed_index: int) -> int:
    return cfg.seed * 1_000_003 + seed_index


def _depth(cfg: CheckConfig) -> int:
    return 2 * cfg.max_length + cfg.max_part + 4


def _sample_zeta(rng: random.Random, us: Sequence[Scalar], vs: Sequence[Scalar]) -> Fraction:
    """zeta away from -x, y and the poles of the rising factorials (2 zeta)_k."""

    for _ in range(1000):
        zeta = random_rational(rng, 8)
        doubled = 2 * zeta
        if doubled.denominator == 1 and doubled <= 0:
            continue
        if any(zeta + x == 0 for x in list(us) + list(vs)) or any(zeta == y for y in vs):
            continue
        return zeta
    raise GenericityError("genericity sampling failed for zeta")


def _sample_generic(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    seed = _point_seed(cfg, seed_index)
    count = cfg.max_length + 1
    sample = sample_generic_params(
        seed, _depth(cfg), count, count_v=count, bound=settings.bound
    )
    rng = random.Random(seed)
    inputs: CheckInputs = {
        "us": list(sample.us),
        "vs": list(sample.vs),
        "t": random_rational(rng, settings.bound),
        "zeta": _sample_zeta(rng, sample.us, sample.vs),
    }
    return sample.params, inputs


def _sample_limit(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    """Small variables for the numeric limits: 1 +- O(eps) lifts stay well conditioned."""

    params, inputs = _sample_generic(cfg, seed_index)
    rng = random.Random(_point_seed(cfg, seed_index) + 1)
    us = _distinct(rng, 3, lambda: random_rational(rng, 8))
    vs = _distinct(rng, 2, lambda: random_rational(rng, 8))
    inputs.update({"us": us, "vs": vs, "zeta": _sample_zeta(rng, us, vs)})
    return params, inputs


def _distinct(
    rng: random.Random, count: int, draw: Callable[[], Fraction], avoid: Sequence[Scalar] = ()
) -> List[Fraction]:
    points: List[Fraction] = []
    for _ in range(1000):
        if len(points) == count:
            return points
        x = draw()
        if x == 0 or x in points or x in avoid:
            continue
        points.append(x)
    if len(points) == count:
        return points
    raise GenericityError(f"genericity sampling failed for {count} distinct points")


def _points_near_s(
    rng: random.Random,
    params: Params,
    count: int,
    radius: Fraction,
    partners: Sequence[Scalar] = (),
) -> List[Scalar]:
    s, q = params.s, params.q
    points: List[Scalar] = []
    for _ in range(1000):
        if len(points) == count:
            return points
        x = random_near(rng, s, radius, settings.bound)
        if x == s or x == 0 or x in points or 1 - s * x == 0:
            continue
        if any(x == q * y or y == q * x for y in points):
            continue
        if any(1 - x * y == 0 for y in partners):
            continue
        points.append(x)
    if len(points) == count:
        return points
    raise GenericityError(f"genericity sampling failed near s={s}")


def _near_s(
    cfg: CheckConfig,
    seed_index: int,
    count_u: int,
    count_v: int,
    *,
    radius_u: Fraction = NEAR_S_RADIUS,
    params: Optional[Params] = None,
) -> Tuple[Params, List[Scalar], List[Scalar]]:
    seed = _point_seed(cfg, seed_index)
    if params is None:
        params = sample_generic_params(
            seed, _depth(cfg), 0, count_v=0, bound=settings.bound
        ).params
    rng = random.Random(seed)
    us = _points_near_s(rng, params, count_u, radius_u)
    vs = _points_near_s(rng, params, count_v, NEAR_S_RADIUS, partners=us)
    return params, us, vs


def _case(cases: Sequence[Any], seed_index: int) -> Any:
    return cases[seed_index % len(cases)]


def _sample_skew_cauchy_single(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    lam, mu = _case(SKEW_CAUCHY_SINGLE_CASES, seed_index)
    params, us, vs = _near_s(cfg, seed_index, 1, 1)
    return params, {"lambda": Signature(lam), "mu": Signature(mu), "us": us, "vs": vs}


def _sample_skew_cauchy(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    lam, mu = _case(SKEW_CAUCHY_CASES, seed_index)
    params, us, vs = _near_s(cfg, seed_index, len(mu) - len(lam), 2)
    return params, {"lambda": Signature(lam), "mu": Signature(mu), "us": us, "vs": vs}


def _sample_pieri_f(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    mu = Signature(_case(PIERI_F_CASES, seed_index))
    params, us, vs = _near_s(cfg, seed_index, len(mu), 1)
    return params, {"mu": mu, "us": us, "vs": vs}


def _sample_pieri_g(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    lam, big_n = _case(PIERI_G_CASES, seed_index)
    params, us, vs = _near_s(cfg, seed_index, 1, big_n)
    return params, {"lambda": Signature(lam), "us": us, "vs": vs}


def _sample_cauchy(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    big_m, big_n = _case(CAUCHY_CASES, seed_index)
    params, us, vs = _near_s(cfg, seed_index, big_m, big_n)
    return params, {"us": us, "vs": vs}


def _sample_companions(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    lam, mu = _case(COMPANION_CASES, seed_index)
    params, us, vs = _near_s(cfg, seed_index, 1, 1)
    return params, {"lambda": Signature(lam), "mu": Signature(mu), "us": us, "vs": vs}


def _sample_eigenrelation(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    mu = Signature(_case(EIGENRELATION_CASES, seed_index))
    params, us, vs = _near_s(
        cfg, seed_index, len(mu), 1, radius_u=EIGENRELATION_RADIUS
    )
    t = params.q * params.q if seed_index % 2 == 0 else Fraction(7, 5)
    return params, {"mu": mu, "us": us, "vs": vs, "t": t}


def _spatial_params() -> Params:
    return Params.create(*SPATIAL_PARAMS)


def _sample_spatial(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    mu, nu = _case(SPATIAL_CASES, seed_index)
    return _spatial_params(), {"mu": Signature(mu), "nu": Signature(nu)}


def _sample_spatial_check(cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
    nu, big_n = _case(SPATIAL_CHECK_CASES, seed_index)
    params, _, vs = _near_s(cfg, seed_index, 0, big_n, params=_spatial_params())
    return params, {"nu": Signature(nu), "vs": vs}


# Runners for the truncated checks take their arguments from the inputs mapping.

def _run_skew_cauchy_single(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    return check_skew_cauchy_single(
        _signature(inputs, "lambda", Signature()),
        _signature(inputs, "mu", Signature.of(0)),
        _points(inputs, "us", 1)[0],
        _points(inputs, "vs", 1)[0],
        params,
        cfg,
    )


def _run_skew_cauchy(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    lam = _signature(inputs, "lambda", Signature())
    mu = _signature(inputs, "mu", Signature.zeros(2))
    big_m = len(mu) - len(lam)
    return check_skew_cauchy(
        lam, mu, _points(inputs, "us", big_m)[:big_m], _points(inputs, "vs", 1), params, cfg
    )


def _run_pieri_f(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    mu = _signature(inputs, "mu", Signature.of(0))
    return check_pieri_f(
        mu, _points(inputs, "us", len(mu))[: len(mu)], _points(inputs, "vs", 1)[0], params, cfg
    )


def _run_pieri_g(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    return check_pieri_g(
        _signature(inputs, "lambda", Signature()),
        _points(inputs, "us", 1)[0],
        _points(inputs, "vs", 1),
        params,
        cfg,
    )


def _run_cauchy(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    return check_cauchy(list(inputs.get("us") or []), _points(inputs, "vs", 1), params, cfg)


def _run_companions(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    return check_cauchy_companions(
        _signature(inputs, "lambda", Signature.of(0)),
        _signature(inputs, "mu", Signature.of(0)),
        _points(inputs, "us", 1)[0],
        _points(inputs, "vs", 1)[0],
        params,
        cfg,
    )


def _run_eigenrelation(params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
    mu = _signature(inputs, "mu", Signature.of(0))
    return check_fused_eigenrelation(
        mu,
        _points(inputs, "us", len(mu))[: len(mu)],
        _points(inputs, "vs", 1)[0],
        inputs.get("t", params.q * params.q),
        params,
        cfg,
    )


# Catalog

@dataclass(frozen=True)
class IdentityCheck:
    id: str
    kind: CheckKind
    runner: CheckRunner
    sampler: CheckSampler

    @property
    def paper_ref(self) -> str:
        return REFERENCES[self.id]

    def sample(self, cfg: CheckConfig, seed_index: int) -> Tuple[Params, CheckInputs]:
        return self.sampler(cfg, seed_index)

    def run(self, params: Params, inputs: Mapping[str, Any], cfg: CheckConfig) -> Report:
        return self.runner(params, inputs, cfg)


def _catalog(*entries: Tuple[str, CheckKind, CheckRunner, CheckSampler]) -> Dict[str, IdentityCheck]:
    return {entry[0]: IdentityCheck(*entry) for entry in entries}


CATALOG: Dict[str, IdentityCheck] = _catalog(
    ("yang-baxter", "exact", check_yang_baxter, _sample_generic),
    ("cross-conjugation", "exact", check_cross_conjugation, _sample_generic),
    ("weight-support", "exact", check_weight_support, _sample_generic),
    ("gauge-invariance", "exact", check_gauge_invariance, _sample_generic),
    ("cross-method", "exact", check_cross_method, _sample_generic),
    ("symmetry", "exact", check_symmetry, _sample_generic),
    ("branching", "exact", check_branching, _sample_generic),
    ("shift", "exact", check_shift, _sample_generic),
    ("g-via-f", "exact", check_g_via_f, _sample_generic),
    ("stability", "exact", check_stability, _sample_generic),
    ("conjugation", "exact", check_conjugation, _sample_generic),
    ("principal", "exact", check_principal, _sample_generic),
    ("fused-row-stack", "exact", check_fused_row_stack, _sample_generic),
    ("fused-polynomial", "exact", check_fused_polynomial, _sample_generic),
    ("fused-principal", "exact", check_fused_principal, _sample_generic),
    ("qhahn-row", "exact", check_qhahn_row, _sample_generic),
    ("qhahn-support", "exact", check_qhahn_support, _sample_generic),
    ("qhahn-eigenvalue", "exact", check_qhahn_eigenvalue, _sample_generic),
    ("degeneration-hl", "exact", check_degeneration_hl, _sample_generic),
    ("degeneration-inhom-hl", "exact", check_degeneration_inhom_hl, _sample_generic),
    ("degeneration-schur", "exact", check_degeneration_schur, _sample_generic),
    ("degeneration-inhom-schur", "exact", check_degeneration_inhom_schur, _sample_generic),
    ("degeneration-rational", "exact", check_degeneration_rational, _sample_generic),
    ("symmetrization-identity", "exact", check_symmetrization_identity, _sample_generic),
    ("residue-identity", "exact", check_residue_identity, _sample_generic),
    ("two-row-transfer", "exact", check_two_row_transfer, _sample_generic),
    ("transfer-conjugation", "exact", check_transfer_conjugation, _sample_generic),
    ("rational-limit", "truncated", check_rational_limit, _sample_limit),
    ("inhom-limit", "truncated", check_inhom_limit, _sample_limit),
    ("skew-cauchy-single", "truncated", _run_skew_cauchy_single, _sample_skew_cauchy_single),
    ("skew-cauchy", "truncated", _run_skew_cauchy, _sample_skew_cauchy),
    ("pieri-f", "truncated", _run_pieri_f, _sample_pieri_f),
    ("pieri-g", "truncated", _run_pieri_g, _sample_pieri_g),
    ("cauchy", "truncated", _run_cauchy, _sample_cauchy),
    ("cauchy-companions", "truncated", _run_companions, _sample_companions),
    ("fused-eigenrelation", "truncated", _run_eigenrelation, _sample_eigenrelation),
    ("spatial-orthogonality", "quadrature", check_spatial_orthogonality, _sample_spatial),
    ("spatial-check", "quadrature", check_spatial_coefficient, _sample_spatial_check),
)


def get_check(check_id: str) -> IdentityCheck:
    try:
        return CATALOG[check_id]
    except KeyError:
        raise UnknownIdentityError(check_id) from None


def resolve_ids(ids: Iterable[str]) -> List[str]:
    """Expand "all", drop duplicates and reject unknown ids."""

    resolved: List[str] = []
    for check_id in ids:
        expanded = sorted(CATALOG) if check_id == "all" else [check_id]
        for item in expanded:
            get_check(item)
            if item not in resolved:
                resolved.append(item)
    return resolved


def _error_report(
    check: IdentityCheck,
    params: Optional[Params],
    exc: Exception,
    cfg: CheckConfig,
) -> Report:
    diagnostics = Diagnostics(detail={"error": str(exc), "errorType": type(exc).__name__})
    if isinstance(exc, TruncationError):
        diagnostics = exc.diagnostics.model_copy(update={"detail": diagnostics.detail})
    elif isinstance(exc, QuadratureError):
        diagnostics = diagnostics.model_copy(
            update={"node_count": exc.node_count, "last_delta": exc.last_delta}
        )
    return Report(
        id=check.id,
        paper_ref=check.paper_ref,
        kind=check.kind,
        params=_describe(params) if params is not None else {},
        residual=1.0,
        tolerance=cfg.tolerance,
        passed=False,
        diagnostics=diagnostics,
    )


def run_check(
    check_id: str,
    cfg: Optional[CheckConfig] = None,
    seed_index: int = 0,
    *,
    params: Optional[Params] = None,
    inputs: Optional[Mapping[str, Any]] = None,
) -> Report:
    """Run one catalog entry at one sampled point; overrides replace sampled values.

    Arithmetic, truncation, quadrature and sampling failures become failing
    Reports carrying the error; malformed inputs propagate.
    """

    check = get_check(check_id)
    cfg = cfg or CheckConfig(tolerance=settings.tolerance, seed=settings.seed)
    active: Optional[Params] = params
    try:
        sampled_params, sampled_inputs = check.sample(cfg, seed_index)
        active = params or sampled_params
        merged = {**sampled_inputs, **{k: v for k, v in (inputs or {}).items() if v is not None}}
        report = check.run(active, merged, cfg)
    except (
        PoleError,
        TruncationError,
        QuadratureError,
        ConvergenceGateError,
        ContourError,
        GenericityError,
    ) as exc:
        logger.error(f"{check_id} (seed index {seed_index}) raised {type(exc).__name__}: {exc}")
        report = _error_report(check, active, exc, cfg)
    return report.model_copy(update={"seed_index": seed_index})


def run_suite(
    ids: Iterable[str],
    cfg: Optional[CheckConfig] = None,
    threads: Optional[int] = None,
    *,
    params: Optional[Params] = None,
    inputs: Optional[Mapping[str, Any]] = None,
) -> List[Report]:
    """Run every requested check at ``cfg.points`` seed indices, sorted by (id, seed index)."""

    cfg = cfg or CheckConfig(tolerance=settings.tolerance, seed=settings.seed)
    jobs = [(check_id, index) for check_id in resolve_ids(ids) for index in range(cfg.points)]
    if not jobs:
        return []

    def _run(job: Tuple[str, int]) -> Report:
        return run_check(job[0], cfg, job[1], params=params, inputs=inputs)

    workers = max(1, threads or settings.threads)
    logger.info(f"Running {len(jobs)} checks on {workers} thread(s)")
    if workers == 1:
        reports = [_run(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run, jobs))
    return sorted(reports, key=lambda report: (report.id, report.seed_index))
