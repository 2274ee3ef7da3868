from __future__ import annotations

import itertools
import logging
from typing import Callable, List, Sequence

from .matrix import determinant
from .report import Report
from .scalars import (
    Params,
    PoleError,
    Scalar,
    divide,
    format_scalar,
    is_zero,
    lift,
    one_like,
    power,
    q_pochhammer,
    relative_residual,
    rising_factorial,
    zero_like,
)
from .signatures import Signature, SignatureError, clusters

logger = logging.getLogger(__name__)

SCHUR_KINDS = ("F-q0", "G-q0", "F-inhom", "G-inhom")

PairFactor = Callable[[Scalar, Scalar], Scalar]


def _q_pair(q: Scalar) -> PairFactor:
    def _factor(x: Scalar, y: Scalar) -> Scalar:
        return divide(x - q * y, x - y, kind="symmetrization pole", location=f"{x} = {y}")

    return _factor


def _shifted_pair(x: Scalar, y: Scalar) -> Scalar:
    return divide(x - y - 1, x - y, kind="symmetrization pole", location=f"{x} = {y}")


def _cross(xs: Sequence[Scalar], pair: PairFactor) -> Scalar:
    value = one_like(list(xs))
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            value *= pair(xs[i], xs[j])
    return value


def _symmetrize(
    xs: Sequence[Scalar],
    pair: PairFactor,
    single: Callable[[int, Scalar], Scalar],
) -> Scalar:
    """sum over sigma of sigma(prod_{i<j} pair(x_i, x_j) * prod_i single(i, x_i))."""

    total = zero_like(list(xs))
    for perm in itertools.permutations(xs):
        term = one_like(list(xs))
        for index, x in enumerate(perm):
            term *= single(index, x)
            if is_zero(term):
                break
        if is_zero(term):
            continue
        total += term * _cross(perm, pair)
    return total


def _vandermonde(xs: Sequence[Scalar]) -> Scalar:
    value = one_like(list(xs))
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            value *= xs[i] - xs[j]
    if is_zero(value):
        raise PoleError("symmetrization pole", "coincident variables")
    return value


def _inverse_spin(u: Scalar, params: Params) -> Scalar:
    return divide(1, 1 - params.s * u, kind="symmetrization pole", location=f"1 - s u, u={u}")


def f_symmetrized(mu: Signature, us: Sequence[Scalar], params: Params) -> Scalar:
    """F_mu(u_1..u_M) by symmetrization over S_M."""

    mu.require_nonnegative()
    if len(us) != len(mu):
        raise SignatureError(f"f_symmetrized needs {len(mu)} variables, got {len(us)}.")
    us = [lift(u) for u in us]
    q = params.q
    prefactor = power(1 - q, len(mu)) * one_like(params.q, params.s, us)
    for u in us:
        prefactor *= _inverse_spin(u, params)
    if not us:
        return prefactor
    body = _symmetrize(us, _q_pair(q), lambda i, u: power(params.xi(u), mu[i]))
    return prefactor * body


def _g_counts(nu: Signature, vs: Sequence[Scalar]) -> tuple[int, int, int]:
    nu.require_nonnegative()
    return len(nu), nu.zero_count, len(vs)


def g_symmetrized(
    nu: Signature,
    vs: Sequence[Scalar],
    params: Params,
    *,
    subset_form: bool = False,
) -> Scalar:
    """G_nu(v_1..v_N) by full symmetrization, or by the subset-sum form."""

    n, k, big_n = _g_counts(nu, vs)
    vs = [lift(v) for v in vs]
    q, s = params.q, params.s
    zero = zero_like(q, s, vs)
    if big_n < n - k:
        return zero
    if subset_form:
        return _g_subset_form(nu, vs, params)
    prefactor = (
        power(1 - q, big_n)
        * q_pochhammer(s * s, q, n)
        / (q_pochhammer(q, q, big_n - n + k) * q_pochhammer(s * s, q, k))
    )
    moving = n - k
    qk = power(q, k)

    def _single(index: int, v: Scalar) -> Scalar:
        if index < moving:
            return (
                v
                * _inverse_spin(v, params)
                * divide(1, v - s, kind="symmetrization pole", location=f"v = s, v={v}")
                * power(params.xi(v), nu[index])
            )
        return (1 - qk * s * v) * _inverse_spin(v, params)

    if not vs:
        return prefactor + zero
    return prefactor * _symmetrize(vs, _q_pair(q), _single)


def _g_subset_form(nu: Signature, vs: List[Scalar], params: Params) -> Scalar:
    n, k, big_n = len(nu), nu.zero_count, len(vs)
    q, s = params.q, params.s
    moving = n - k
    qk = power(q, k)
    pair = _q_pair(q)
    prefactor = power(1 - q, moving) * q_pochhammer(s * s, q, n) / q_pochhammer(s * s, q, k)
    total = zero_like(q, s, vs)
    for chosen in itertools.combinations(range(big_n), moving):
        inside = [vs[i] for i in chosen]
        outside = [vs[j] for j in range(big_n) if j not in chosen]
        term = one_like(q, s, vs)
        for v in inside:
            term *= v * _inverse_spin(v, params) * divide(
                1, v - s, kind="symmetrization pole", location=f"v = s, v={v}"
            )
        if is_zero(term):
            continue
        for v in outside:
            term *= (1 - qk * s * v) * _inverse_spin(v, params)
        for x in inside:
            for y in outside:
                term *= pair(x, y)
        if is_zero(term):
            continue
        inner = _symmetrize(inside, pair, lambda i, v: power(params.xi(v), nu[i]))
        total += term * inner
    return prefactor * total


def f_principal(mu: Signature, u: Scalar, params: Params) -> Scalar:
    """F_mu(u, qu, ..., q^{M-1} u) in closed form."""

    mu.require_nonnegative()
    u = lift(u)
    q, s = params.q, params.s
    big_m = len(mu)
    denominator = q_pochhammer(s * u, q, big_m)
    value = divide(q_pochhammer(q, q, big_m), denominator, kind="pochhammer pole", location="(su;q)_M")
    for i, part in enumerate(mu.parts):
        point = power(q, i) * u
        value *= power(
            divide(point - s, 1 - s * point, kind="weight pole", location=f"u={point}"), part
        )
    return value


def g_principal(nu: Signature, v: Scalar, big_n: int, params: Params) -> Scalar:
    """G_nu(v, qv, ..., q^{N-1} v) in closed form."""

    nu.require_nonnegative()
    if big_n < 0:
        raise ValueError("g_principal requires N >= 0.")
    v = lift(v)
    q, s = params.q, params.s
    n, k = len(nu), nu.zero_count
    if big_n < n - k:
        return zero_like(q, s, v)
    numerator = (
        q_pochhammer(q, q, big_n)
        * q_pochhammer(s * s, q, n)
        * q_pochhammer(s * v, q, big_n + k)
    )
    denominator = (
        q_pochhammer(q, q, big_n - n + k)
        * q_pochhammer(s * s, q, k)
        * q_pochhammer(s * v, q, n)
        * q_pochhammer(s * v, q, big_n)
        * q_pochhammer(s / v, 1 / q, n - k)
    )
    value = divide(numerator, denominator, kind="pochhammer pole", location="principal G")
    for i in range(n - k):
        point = power(q, i) * v
        value *= power(
            divide(point - s, 1 - s * point, kind="weight pole", location=f"v={point}"), nu[i]
        )
    return value


def principal_points(x: Scalar, count: int, q: Scalar) -> List[Scalar]:
    return [power(q, i) * lift(x) for i in range(count)]


def _hl_normalization(padded: Signature, q: Scalar) -> Scalar:
    value = one_like(q)
    for _, size in clusters(padded):
        value *= power(1 - q, size) / q_pochhammer(q, q, size)
    return value


def hall_littlewood_p(lam: Signature, xs: Sequence[Scalar], q: Scalar) -> Scalar:
    """Classical P_lam(x_1..x_n), lam padded with zeros to n parts."""

    lam.require_nonnegative()
    xs = [lift(x) for x in xs]
    q = lift(q)
    nonzero = lam.nonzero()
    if len(nonzero) > len(xs):
        return zero_like(q, xs)
    padded = nonzero.padded(len(xs))
    if not xs:
        return one_like(q)
    body = _symmetrize(xs, _q_pair(q), lambda i, x: power(x, padded[i]))
    return _hl_normalization(padded, q) * body


def hall_littlewood_q(lam: Signature, xs: Sequence[Scalar], q: Scalar) -> Scalar:
    """Q_lam = b_lam P_lam with b_lam = prod_{j>=1} (q;q)_{m_j}."""

    q = lift(q)
    b = one_like(q)
    for value, size in clusters(lam):
        if value != 0:
            b *= q_pochhammer(q, q, size)
    return b * hall_littlewood_p(lam, xs, q)


def hl_dictionary_factor(sig: Signature, q: Scalar, *, include_zero: bool) -> Scalar:
    """prod (q;q)_{m_i} over the clusters of ``sig`` (zero cluster optional)."""

    value = one_like(lift(q))
    for part, size in clusters(sig):
        if part == 0 and not include_zero:
            continue
        value *= q_pochhammer(q, q, size)
    return value


def schur_like_determinant(
    kind: str, sig: Signature, variables: Sequence[Scalar], params: Params
) -> Scalar:
    """q = 0 and inhomogeneous q = 0 functions as det[...] / Vandermonde."""

    if kind not in SCHUR_KINDS:
        raise ValueError(f"Unknown determinant kind {kind!r}; expected one of {', '.join(SCHUR_KINDS)}.")
    sig.require_nonnegative()
    xs = [lift(x) for x in variables]
    s = params.s
    size = len(xs)
    if kind.startswith("F") and size != len(sig):
        raise SignatureError(f"{kind} needs {len(sig)} variables, got {size}.")
    n, k = len(sig), sig.zero_count
    moving = n - k
    if kind.startswith("G") and size < moving:
        return zero_like(params.q, s, xs)
    if not xs:
        return one_like(params.q, s)

    def _entry(x: Scalar, column: int) -> Scalar:
        base = power(x, size - 1 - column)
        if kind == "F-q0":
            return base * _inverse_spin(x, params) * power(params.xi(x), sig[column])
        if kind == "F-inhom":
            return base * power(x - 1, sig[column])
        if kind == "G-q0":
            if column < moving:
                return (
                    base
                    * x
                    * _inverse_spin(x, params)
                    * divide(1, x - s, kind="symmetrization pole", location=f"v = s, v={x}")
                    * power(params.xi(x), sig[column])
                )
            return base * _inverse_spin(x, params) if k >= 1 else base
        if column < moving:
            return base * x * power(x - 1, sig[column] - 1)
        return base

    rows = [[_entry(x, column) for column in range(size)] for x in xs]
    value = determinant(rows) / _vandermonde(xs)
    if kind == "G-q0":
        value *= power(1 - s * s, int(n >= 1) - int(k >= 1))
    return value


def inhom_f_symmetrized(mu: Signature, zs: Sequence[Scalar], q: Scalar) -> Scalar:
    """Limit of s^{-|mu|} F_mu(s z_1, ..., s z_M) as s -> 0."""

    mu.require_nonnegative()
    if len(zs) != len(mu):
        raise SignatureError(f"inhom_f_symmetrized needs {len(mu)} variables, got {len(zs)}.")
    zs = [lift(z) for z in zs]
    q = lift(q)
    prefactor = power(1 - q, len(mu)) * one_like(q, zs)
    if not zs:
        return prefactor
    return prefactor * _symmetrize(zs, _q_pair(q), lambda i, z: power(z - 1, mu[i]))


def inhom_g_symmetrized(nu: Signature, ws: Sequence[Scalar], q: Scalar) -> Scalar:
    """Limit of s^{-|nu|} G_nu(s w_1, ..., s w_N) as s -> 0."""

    n, k, big_n = _g_counts(nu, ws)
    ws = [lift(w) for w in ws]
    q = lift(q)
    if big_n < n - k:
        return zero_like(q, ws)
    moving = n - k
    prefactor = power(1 - q, big_n) / q_pochhammer(q, q, big_n - moving)
    if not ws:
        return prefactor

    def _single(index: int, w: Scalar) -> Scalar:
        if index < moving:
            return w * power(w - 1, nu[index] - 1, kind="symmetrization pole")
        return one_like(w)

    return prefactor * _symmetrize(ws, _q_pair(q), _single)


def rational_limit_f(mu: Signature, xs: Sequence[Scalar], zeta: Scalar) -> Scalar:
    mu.require_nonnegative()
    if len(xs) != len(mu):
        raise SignatureError(f"rational_limit_f needs {len(mu)} variables, got {len(xs)}.")
    xs = [lift(x) for x in xs]
    zeta = lift(zeta)
    prefactor = one_like(zeta, xs)
    for x in xs:
        prefactor *= divide(1, zeta + x, kind="weight pole", location=f"zeta + x, x={x}")
    if not xs:
        return prefactor
    body = _symmetrize(
        xs, _shifted_pair, lambda i, x: power((zeta - x) / (zeta + x), mu[i])
    )
    return prefactor * body


def rational_limit_g(nu: Signature, ys: Sequence[Scalar], zeta: Scalar) -> Scalar:
    nu.require_nonnegative()
    ys = [lift(y) for y in ys]
    zeta = lift(zeta)
    n, k, big_n = len(nu), nu.zero_count, len(ys)
    moving = n - k
    if big_n < moving:
        return zero_like(zeta, ys)
    factorial = one_like(zeta)
    for j in range(1, big_n - moving + 1):
        factorial *= j
    prefactor = rising_factorial(2 * zeta, n) / (factorial * rising_factorial(2 * zeta, k))

    def _single(index: int, y: Scalar) -> Scalar:
        denominator = zeta + y
        if is_zero(denominator):
            raise PoleError("weight pole", f"zeta + y, y={y}")
        if index < moving:
            return divide(
                power((zeta - y) / denominator, nu[index]),
                denominator * (zeta - y),
                kind="symmetrization pole",
                location=f"zeta = y, y={y}",
            )
        return (k + zeta + y) / denominator

    if not ys:
        return prefactor
    return prefactor * _symmetrize(ys, _shifted_pair, _single)


def symmetrization_constant(p: int, q: Scalar) -> Scalar:
    """(q;q)_p / (1-q)^p."""

    if p < 0:
        raise ValueError("symmetrization_constant requires p >= 0.")
    q = lift(q)
    return q_pochhammer(q, q, p) / power(1 - q, p)


def symmetrization_sum(zs: Sequence[Scalar], q: Scalar) -> Scalar:
    """Left side of the symmetrization identity evaluated at distinct zs."""

    zs = [lift(z) for z in zs]
    if not zs:
        return one_like(lift(q))
    return _symmetrize(zs, _q_pair(lift(q)), lambda i, z: one_like(z))


def _residue_sides(c1: int, us: Sequence[Scalar], u_last: Scalar, q: Scalar) -> tuple[Scalar, Scalar]:
    us = [lift(u) for u in us]
    q, u_last = lift(q), lift(u_last)
    if c1 < 1 or len(us) != c1:
        raise ValueError("residue identity needs c1 >= 1 and exactly c1 variables.")
    qc = power(q, c1)
    left = zero_like(q, us, u_last)
    for l, ul in enumerate(us):
        term = divide(ul - qc * u_last, ul - u_last, kind="symmetrization pole", location="u_l = u_M")
        for i, ui in enumerate(us):
            if i != l:
                term *= divide(ui - q * ul, ui - ul, kind="symmetrization pole", location="u_i = u_l")
        left += term
    right = (1 - qc) / (1 - q)
    for ui in us:
        right *= divide(ui - q * u_last, ui - u_last, kind="symmetrization pole", location="u_i = u_M")
    return left, right


def residue_identity_check(
    c1: int, us: Sequence[Scalar], u_last: Scalar, q: Scalar, tolerance: float = 1e-10
) -> Report:
    """Partial-fraction identity used when a cluster is peeled off a symmetrization."""

    left, right = _residue_sides(c1, us, u_last, q)
    exact = not isinstance(left, complex)
    residual = 0.0 if exact and left == right else relative_residual(left, right)
    passed = (left == right) if exact else residual <= tolerance
    return Report(
        id="residue-identity",
        paper_ref="partial-fraction identity for a cluster of size c1",
        kind="exact",
        params={
            "c1": c1,
            "q": format_scalar(q),
            "us": [format_scalar(u) for u in us],
            "uM": format_scalar(u_last),
        },
        residual=residual,
        tolerance=0.0 if exact else tolerance,
        passed=passed,
    )
