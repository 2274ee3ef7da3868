from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .matrix import Matrix, matmul
from .scalars import Params, PoleError, Scalar, is_zero, one_like, zero_like
from .signatures import Signature, SignatureError, bounded_signatures, c_factor
from .weights import (
    BASIC,
    CONJUGATED,
    VertexConfig,
    WeightFamily,
    twisted_two_vertex_matrix,
    two_vertex_matrix,
)

logger = logging.getLogger(__name__)

F_ROW = 1
G_ROW = 0


@dataclass(frozen=True)
class RowBoundary:
    """Bottom and top signatures of one row plus the left boundary bit."""

    bottom: Signature
    top: Signature
    left_arrow: int

    def __post_init__(self) -> None:
        if self.left_arrow not in (F_ROW, G_ROW):
            raise SignatureError("left_arrow must be 0 or 1.")
        if len(self.top) != len(self.bottom) + self.left_arrow:
            kind = "F-row" if self.left_arrow else "G-row"
            raise SignatureError(
                f"{kind} needs len(top) = len(bottom) + {self.left_arrow}; "
                f"got {self.top} over {self.bottom}."
            )


@dataclass(frozen=True)
class PathEnsembleWeight:
    value: Scalar
    column_trace: Tuple[Tuple[int, VertexConfig], ...] = ()


def _translation(*signatures: Signature) -> int:
    lowest = min((sig.smallest for sig in signatures if len(sig)), default=0)
    return -lowest if lowest < 0 else 0


def _column_configs(row: RowBoundary, capacity: Optional[int]) -> Optional[List[VertexConfig]]:
    """The forced column configurations of a row, or None when the carry breaks."""

    shift = _translation(row.bottom, row.top)
    if shift and row.left_arrow == F_ROW:
        raise SignatureError("F-rows require nonnegative signatures.")
    bottom = Counter(part + shift for part in row.bottom)
    top = Counter(part + shift for part in row.top)
    last = max(row.bottom.largest, row.top.largest, 0) + shift
    carry = row.left_arrow
    configs: List[VertexConfig] = []
    for column in range(last + 1):
        i1, i2 = bottom[column], top[column]
        j2 = i1 + carry - i2
        if j2 < 0 or (capacity is not None and j2 > capacity):
            return None
        configs.append(VertexConfig(i1, carry, i2, j2))
        carry = j2
    if carry != 0:
        return None
    return configs


def one_row_ensemble(
    row: RowBoundary,
    spectral: Scalar,
    family: WeightFamily = BASIC,
    params: Optional[Params] = None,
) -> PathEnsembleWeight:
    if params is None:
        raise ValueError("one_row_ensemble requires params.")
    zero = zero_like(spectral, params.q, params.s)
    configs = _column_configs(row, family.capacity)
    if configs is None:
        return PathEnsembleWeight(zero)
    value = zero + 1
    for column, cfg in enumerate(configs):
        try:
            weight = family.weight(cfg, spectral, params)
        except PoleError as exc:
            raise PoleError(exc.kind, f"column {column} {cfg}: {exc.location}") from exc
        if is_zero(weight):
            return PathEnsembleWeight(zero)
        value *= weight
    return PathEnsembleWeight(value, tuple(enumerate(configs)))


def one_row_weight(
    row: RowBoundary,
    spectral: Scalar,
    family: WeightFamily = BASIC,
    params: Optional[Params] = None,
) -> Scalar:
    """Partition function of a single row of vertices with spectral parameter ``spectral``."""

    return one_row_ensemble(row, spectral, family, params).value


def row_admissible(row: RowBoundary, family: WeightFamily = BASIC) -> bool:
    """Whether every forced column configuration lies in the family's support."""

    configs = _column_configs(row, family.capacity)
    return configs is not None and all(family.support(cfg) for cfg in configs)


def _chain_sum(
    bottom: Signature,
    top: Signature,
    spectrals: Sequence[Scalar],
    left_arrow: int,
    family: WeightFamily,
    params: Params,
) -> Scalar:
    one = one_like(params.q, params.s, list(spectrals))
    zero = one - one
    rows = len(spectrals)

    @lru_cache(maxsize=None)
    def _from(row: int, kappa: Signature) -> Scalar:
        if row == rows:
            return one if kappa == top else zero
        if row == rows - 1:
            return one_row_weight(
                RowBoundary(kappa, top, left_arrow), spectrals[row], family, params
            )
        lower = list(kappa.parts) + [0] * left_arrow
        upper = list(top.parts[: len(lower)])
        total = zero
        for nxt in bounded_signatures(lower, upper):
            weight = one_row_weight(
                RowBoundary(kappa, nxt, left_arrow), spectrals[row], family, params
            )
            if is_zero(weight):
                continue
            rest = _from(row + 1, nxt)
            if not is_zero(rest):
                total += weight * rest
        return total

    return _from(0, bottom)


def skew_f(
    lam: Signature,
    mu: Signature,
    us: Sequence[Scalar],
    family: WeightFamily = BASIC,
    params: Optional[Params] = None,
) -> Scalar:
    """F_{lam/mu}(u_1, ..., u_{L-M}) as a sum over interlacing chains of F-rows."""

    if params is None:
        raise ValueError("skew_f requires params.")
    lam.require_nonnegative()
    mu.require_nonnegative()
    if len(us) != len(lam) - len(mu):
        raise SignatureError(
            f"skew_f needs len(us) = len(lam) - len(mu); got {len(us)} for {lam} / {mu}."
        )
    return _chain_sum(mu, lam, list(us), F_ROW, family, params)


def skew_g(
    lam: Signature,
    nu: Signature,
    vs: Sequence[Scalar],
    family: WeightFamily = BASIC,
    params: Optional[Params] = None,
) -> Scalar:
    """G_{lam/nu}(v_1, ..., v_N); general signatures are translated jointly."""

    if params is None:
        raise ValueError("skew_g requires params.")
    if len(lam) != len(nu):
        raise SignatureError(f"skew_g needs equal lengths; got {lam} / {nu}.")
    shift = _translation(lam, nu)
    return _chain_sum(nu.shifted(shift), lam.shifted(shift), list(vs), G_ROW, family, params)


def _c_ratio(top: Signature, bottom: Signature, params: Params) -> Scalar:
    shift = _translation(top, bottom)
    return c_factor(top.shifted(shift), params) / c_factor(bottom.shifted(shift), params)


def skew_f_conjugated(
    lam: Signature,
    mu: Signature,
    us: Sequence[Scalar],
    params: Params,
    *,
    via_weights: bool = False,
) -> Scalar:
    """F^c_{lam/mu} = c(lam)/c(mu) F_{lam/mu}, or the conjugated-weight lattice."""

    if via_weights:
        return skew_f(lam, mu, us, CONJUGATED, params)
    value = skew_f(lam, mu, us, BASIC, params)
    if is_zero(value):
        return value
    return _c_ratio(lam, mu, params) * value


def skew_g_conjugated(
    lam: Signature,
    nu: Signature,
    vs: Sequence[Scalar],
    params: Params,
    *,
    via_weights: bool = False,
    family: WeightFamily = BASIC,
) -> Scalar:
    if via_weights:
        return skew_g(lam, nu, vs, CONJUGATED, params)
    value = skew_g(lam, nu, vs, family, params)
    if is_zero(value):
        return value
    return _c_ratio(lam, nu, params) * value


def one_row_image_support(
    nu: Signature,
    left_arrow: int,
    max_part: int,
    family: WeightFamily = BASIC,
) -> Iterator[Signature]:
    """Signatures reachable from ``nu`` through one row, parts <= ``max_part``."""

    nu.require_nonnegative()
    if max_part < nu.largest:
        raise ValueError(f"max_part {max_part} is below the largest part of {nu}.")
    lower = list(nu.parts) + [0] * left_arrow
    upper = [max_part] * len(lower)
    for kappa in bounded_signatures(lower, upper):
        if row_admissible(RowBoundary(nu, kappa, left_arrow), family):
            yield kappa


def two_row_transfer(
    bottom: Signature,
    top: Signature,
    u1: Scalar,
    u2: Scalar,
    params: Params,
    *,
    twisted: bool = False,
) -> Matrix:
    """Product over columns of two-vertex matrices with occupancies from ``bottom`` and ``top``.

    With ``twisted`` the factors are the swapped-row matrices of w_{u2,u1}.
    """

    bottom.require_nonnegative()
    top.require_nonnegative()
    below, above = Counter(bottom.parts), Counter(top.parts)
    last = max(bottom.largest, top.largest, 0)
    if twisted:
        factors = [
            twisted_two_vertex_matrix(u2, u1, below[x], above[x], params)
            for x in range(last + 1)
        ]
    else:
        factors = [
            two_vertex_matrix(u1, u2, below[x], above[x], params) for x in range(last + 1)
        ]
    return matmul(*factors)


def g_via_f_prefactor(mu: Signature, vs: Sequence[Scalar], params: Params) -> Scalar:
    """prod_i w_{v_i}(i, 0; i-1, 1): the left column that turns F_{mu-1^M} into G_mu."""

    value = one_like(params.q, params.s, list(vs))
    for index, v in enumerate(vs, start=1):
        value *= BASIC.weight(VertexConfig(index, 0, index - 1, 1), v, params)
    return value
