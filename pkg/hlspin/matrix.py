from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import numpy as np
import sympy

from .scalars import COMPLEX, PoleError, Scalar, backend_of, lift

Matrix = List[List[Scalar]]


def _is_exact(rows: Sequence[Sequence[Scalar]]) -> bool:
    return backend_of([list(row) for row in rows]) != COMPLEX


def _to_sympy(rows: Sequence[Sequence[Scalar]]) -> sympy.Matrix:
    return sympy.Matrix(
        [
            [sympy.Rational(value.numerator, value.denominator) for value in map(lift, row)]
            for row in rows
        ]
    )


def _from_sympy(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def determinant(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Exact determinant via sympy, complex determinant via numpy."""

    if not rows:
        return Fraction(1)
    if _is_exact(rows):
        return _from_sympy(_to_sympy(rows).det(method="bareiss"))
    array = np.array([[complex(lift(v)) for v in row] for row in rows], dtype=complex)
    return complex(np.linalg.det(array))


def inverse(rows: Sequence[Sequence[Scalar]], *, kind: str = "singular matrix") -> Matrix:
    if _is_exact(rows):
        matrix = _to_sympy(rows)
        if matrix.det() == 0:
            raise PoleError(kind)
        inv = matrix.inv()
        return [[_from_sympy(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]
    array = np.array([[complex(lift(v)) for v in row] for row in rows], dtype=complex)
    try:
        inv_array = np.linalg.inv(array)
    except np.linalg.LinAlgError as exc:
        raise PoleError(kind) from exc
    return [[complex(value) for value in row] for row in inv_array]


def matmul(*factors: Sequence[Sequence[Scalar]]) -> Matrix:
    """Left-to-right product on object arrays, which keeps Fractions exact."""

    product = np.array(factors[0], dtype=object)
    for factor in factors[1:]:
        product = product.dot(np.array(factor, dtype=object))
    return [list(row) for row in product.tolist()]


def identity(size: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
