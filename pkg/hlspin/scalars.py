from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Iterable, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, complex]

EXACT = "exact-rational"
COMPLEX = "complex-float"

# Equality threshold for the complex backend when screening degeneracy loci.
COMPLEX_ZERO_TOLERANCE = 1e-14

_RATIONAL_LITERAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_DECIMAL_LITERAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$")
_COMPLEX_LITERAL = re.compile(
    r"^(?P<re>[+-]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)?"
    r"(?P<im>[+-]\d*(?:\.\d+)?(?:[eE][+-]?\d+)?)i$"
)


class PoleError(ZeroDivisionError):
    """Raised when a formula hits one of its poles."""

    def __init__(self, kind: str, location: str = ""):
        message = kind if not location else f"{kind} at {location}"
        super().__init__(message)
        self.kind = kind
        self.location = location


class BackendMismatchError(TypeError):
    """Raised when exact and floating scalars are mixed in one operation."""


class GenericityError(RuntimeError):
    """Raised when the sampler cannot find a point off every degeneracy locus."""


class ParamsError(ValueError):
    """Raised when (q, s) sit on an excluded degeneracy locus."""


def lift(value: object) -> Scalar:
    """Coerce integers to exact rationals and floats to complex scalars."""

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (float, complex)):
        return complex(value)
    if isinstance(value, Number):
        return complex(value)  # type: ignore[arg-type]
    raise TypeError(f"Unsupported scalar type: {type(value).__name__}")


def backend_of(*values: object) -> Optional[str]:
    """Return the common backend tag of the arguments; ints are neutral."""

    found: Optional[str] = None
    for value in values:
        if isinstance(value, (list, tuple)):
            tag = backend_of(*value)
        elif isinstance(value, Fraction):
            tag = EXACT
        elif isinstance(value, (bool, int)) or value is None:
            tag = None
        elif isinstance(value, (float, complex)):
            tag = COMPLEX
        else:
            raise TypeError(f"Unsupported scalar type: {type(value).__name__}")
        if tag is None:
            continue
        if found is None:
            found = tag
        elif found != tag:
            raise BackendMismatchError(
                f"Cannot mix {found} and {tag} scalars in one operation."
            )
    return found


def zero_like(*values: object) -> Scalar:
    """Additive identity in the backend of ``values`` (exact when undetermined)."""

    return complex(0) if backend_of(*values) == COMPLEX else Fraction(0)


def one_like(*values: object) -> Scalar:
    return complex(1) if backend_of(*values) == COMPLEX else Fraction(1)


def is_zero(value: Scalar) -> bool:
    if isinstance(value, complex):
        return abs(value) <= COMPLEX_ZERO_TOLERANCE
    return value == 0


def power(base: Scalar, exponent: int, *, kind: str = "pole") -> Scalar:
    """Integer power that reports negative powers of zero as a pole."""

    base = lift(base)
    try:
        return base**exponent
    except ZeroDivisionError as exc:
        raise PoleError(kind, f"0**{exponent}") from exc


def divide(numerator: Scalar, denominator: Scalar, *, kind: str, location: str = "") -> Scalar:
    if is_zero(denominator):
        raise PoleError(kind, location)
    return numerator / denominator


def q_pochhammer(x: Scalar, q: Scalar, n: int) -> Scalar:
    """(x;q)_n, including the n < 0 extension 1/prod_{m=n}^{-1}(1 - q^m x)."""

    backend_of(x, q)
    x, q = lift(x), lift(q)
    result: Scalar = x * 0 + q * 0 + 1
    if n >= 0:
        factor = x
        for _ in range(n):
            result *= 1 - factor
            factor *= q
        return result
    denominator = result
    for m in range(n, 0):
        term = 1 - power(q, m, kind="pochhammer pole") * x
        if is_zero(term):
            raise PoleError("pochhammer pole", f"m={m}")
        denominator *= term
    return result / denominator


def rising_factorial(a: Scalar, n: int) -> Scalar:
    """Classical Pochhammer symbol (a)_n = a(a+1)...(a+n-1)."""

    a = lift(a)
    result = a * 0 + 1
    for k in range(n):
        result *= a + k
    return result


def regularized_phi(
    order: int,
    n: int,
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    q: Scalar,
    z: Scalar,
) -> Scalar:
    """Regularized terminating series sum_k z^k (q^-n;q)_k/(q;q)_k prod (a_i;q)_k (b_i q^k;q)_{n-k}."""

    if n < 0:
        raise ValueError("regularized_phi requires n >= 0.")
    if order < 1:
        raise ValueError("regularized_phi requires order r >= 1.")
    if len(a) != order or len(b) != order:
        raise ValueError(f"Expected {order} upper and lower parameters.")
    backend_of(list(a), list(b), q, z)
    q, z = lift(q), lift(z)
    q_inv_n = power(q, -n)
    total = q * 0
    for k in range(n + 1):
        term = power(z, k) * q_pochhammer(q_inv_n, q, k) / q_pochhammer(q, q, k)
        if is_zero(term):
            continue
        qk = power(q, k)
        for a_i, b_i in zip(a, b):
            term *= q_pochhammer(a_i, q, k) * q_pochhammer(lift(b_i) * qk, q, n - k)
        total += term
    return total


@dataclass(frozen=True)
class Params:
    """The global pair (q, s) with the degeneracy loci checked at construction."""

    q: Scalar
    s: Scalar
    depth: int = 0
    excluded_loci: Tuple[str, ...] = ()
    relaxations: Tuple[str, ...] = ()

    @property
    def backend(self) -> Optional[str]:
        return backend_of(self.q, self.s)

    @staticmethod
    def create(
        q: object,
        s: object,
        depth: int = 6,
        relax: Iterable[str] = (),
    ) -> Params:
        """Validate (q, s) against the loci up to ``depth``.

        ``relax`` names loci that a degeneration deliberately sits on:
        ``"q=0"`` and ``"s=0"``.
        """

        q_value, s_value = lift(q), lift(s)
        backend_of(q_value, s_value)
        relaxed = tuple(sorted(set(relax)))
        unknown = set(relaxed) - {"q=0", "s=0"}
        if unknown:
            raise ParamsError(f"Unknown relaxations: {', '.join(sorted(unknown))}")
        loci: List[str] = []

        def _require(expr: Scalar, name: str) -> None:
            if is_zero(expr):
                raise ParamsError(f"Parameters lie on the excluded locus {name}.")
            loci.append(name)

        if "q=0" not in relaxed:
            _require(q_value, "q != 0")
        _require(q_value - 1, "q != 1")
        if "s=0" not in relaxed:
            _require(s_value, "s != 0")
        for j in range(depth + 1):
            qj = power(q_value, j)
            if j >= 1:
                _require(qj - 1, f"q^{j} != 1")
            _require(s_value * s_value * qj - 1, f"s^2 q^{j} != 1")
        return Params(
            q=q_value,
            s=s_value,
            depth=depth,
            excluded_loci=tuple(loci),
            relaxations=relaxed,
        )

    def xi(self, u: Scalar) -> Scalar:
        """xi(u) = (u - s)/(1 - s u)."""

        return divide(u - self.s, 1 - self.s * u, kind="weight pole", location=f"u={u}")


@dataclass(frozen=True)
class GenericSample:
    params: Params
    us: Tuple[Scalar, ...] = ()
    vs: Tuple[Scalar, ...] = ()
    seed: int = 0
    attempts: int = 1
    loci: Tuple[str, ...] = field(default_factory=tuple)


def random_rational(rng: random.Random, bound: int = 64, *, nonzero: bool = True) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value != 0 or not nonzero:
            return value


def random_near(
    rng: random.Random, center: Fraction, radius: Fraction, bound: int = 64
) -> Fraction:
    """Rational on the grid center + radius * k/bound with |k| <= bound."""

    return center + Fraction(rng.randint(-bound, bound), bound) * radius


def _variable_loci(
    params: Params, us: Sequence[Fraction], vs: Sequence[Fraction], allow_near_s: bool
) -> List[str]:
    q, s = params.q, params.s
    failures: List[str] = []
    for group, label in ((us, "u"), (vs, "v")):
        if len(set(group)) != len(group):
            failures.append(f"{label} distinct")
        for i, x in enumerate(group):
            if 1 - s * x == 0:
                failures.append(f"1 - s {label}{i} != 0")
            if x == s and not allow_near_s:
                failures.append(f"{label}{i} != s")
            if x == 0:
                failures.append(f"{label}{i} != 0")
            for j, y in enumerate(group):
                if i != j and (x == q * y or q * x == y):
                    failures.append(f"{label}{i} != q^±1 {label}{j}")
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            if 1 - u * v == 0:
                failures.append(f"1 - u{i} v{j} != 0")
    return failures


def sample_generic_params(
    seed: int,
    depth: int,
    count: int,
    *,
    count_v: Optional[int] = None,
    bound: int = 64,
    near_s: bool = False,
    budget: int = 1000,
) -> GenericSample:
    """Seed-reproducible generic (q, s) plus ``count`` u's and ``count_v`` v's."""

    if depth < 1:
        raise ValueError("sample_generic_params requires depth >= 1.")
    if count < 0 or (count_v is not None and count_v < 0):
        raise ValueError("Variable counts must be nonnegative.")
    n_v = count if count_v is None else count_v
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        try:
            params = Params.create(
                random_rational(rng, bound), random_rational(rng, bound), depth=depth
            )
        except ParamsError as exc:
            logger.debug(f"Rejected (q, s) sample on attempt {attempt}: {exc}")
            continue
        if near_s:
            radius = Fraction(1, 50)
            us = [random_near(rng, params.s, radius, bound) for _ in range(count)]
        else:
            us = [random_rational(rng, bound) for _ in range(count)]
        vs = [random_rational(rng, bound) for _ in range(n_v)]
        failures = _variable_loci(params, us, vs, allow_near_s=near_s)
        if failures:
            logger.debug(
                f"Rejected variable sample on attempt {attempt}: {', '.join(failures)}"
            )
            continue
        return GenericSample(
            params=params,
            us=tuple(us),
            vs=tuple(vs),
            seed=seed,
            attempts=attempt,
            loci=params.excluded_loci,
        )
    raise GenericityError(
        f"genericity sampling failed after {budget} attempts (seed={seed})"
    )


def parse_scalar(text: str) -> Scalar:
    """Parse "a/b" (or a decimal) exactly, or "x+yi" as a complex float."""

    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ValueError("Empty scalar literal.")
    if _RATIONAL_LITERAL.match(cleaned) or _DECIMAL_LITERAL.match(cleaned):
        return Fraction(cleaned)
    match = _COMPLEX_LITERAL.match(cleaned)
    if match:
        real = float(match.group("re") or 0)
        imag_text = match.group("im")
        if imag_text in {"+", "-"}:
            imag_text += "1"
        return complex(real, float(imag_text))
    raise ValueError(f"Invalid scalar literal: {text!r}")


def parse_scalar_list(text: str) -> List[Scalar]:
    cleaned = text.strip()
    if not cleaned:
        return []
    values = [parse_scalar(item) for item in cleaned.split(",")]
    backend_of(values)
    return values


def format_scalar(value: object) -> str:
    value = lift(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def to_complex(value: object) -> complex:
    value = lift(value)
    if isinstance(value, Fraction):
        return complex(float(value))
    return value


def relative_residual(left: object, right: object) -> float:
    """|left - right| / max(|left|, |right|), or the absolute gap near zero."""

    a, b = to_complex(left), to_complex(right)
    scale = max(abs(a), abs(b))
    gap = abs(a - b)
    return gap / scale if scale > 0 else gap
