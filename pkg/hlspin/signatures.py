from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .scalars import Params, Scalar, q_pochhammer

EMPTY_SIGNATURE_LITERALS = {"", "∅", "()"}


class SignatureError(ValueError):
    """Raised for tuples that are not weakly decreasing or fail a length rule."""


@dataclass(frozen=True, order=True)
class Signature:
    """Weakly decreasing integer tuple; the empty signature is valid."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(part) for part in self.parts)
        object.__setattr__(self, "parts", parts)
        for left, right in zip(parts, parts[1:]):
            if left < right:
                raise SignatureError(f"Signature parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> Signature:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Signature:
        cleaned = text.strip().replace(" ", "")
        if cleaned in EMPTY_SIGNATURE_LITERALS:
            return cls(())
        try:
            parts = tuple(int(item) for item in cleaned.strip("()").split(","))
        except ValueError as exc:
            raise SignatureError(f"Invalid signature literal: {text!r}") from exc
        return cls(parts)

    @classmethod
    def zeros(cls, length: int) -> Signature:
        return cls((0,) * length)

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> Signature:
        parts: List[int] = []
        for value in sorted(multiplicities, reverse=True):
            count = multiplicities[value]
            if count < 0:
                raise SignatureError(f"Negative multiplicity for part {value}.")
            parts.extend([value] * count)
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def is_nonnegative(self) -> bool:
        return not self.parts or self.parts[-1] >= 0

    @property
    def zero_count(self) -> int:
        return sum(1 for part in self.parts if part == 0)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def shifted(self, amount: int) -> Signature:
        return Signature(tuple(part + amount for part in self.parts))

    def nonzero(self) -> Signature:
        return Signature(tuple(part for part in self.parts if part != 0))

    def padded(self, length: int) -> Signature:
        if length < len(self.parts):
            raise SignatureError(f"Cannot pad {self} down to length {length}.")
        return Signature(self.parts + (0,) * (length - len(self.parts)))

    def require_nonnegative(self) -> Signature:
        if not self.is_nonnegative:
            raise SignatureError(f"Expected a nonnegative signature, got {self}.")
        return self


def clusters(mu: Signature) -> List[Tuple[int, int]]:
    """Maximal runs of equal parts as (value, size), in order."""

    return [(value, len(list(run))) for value, run in itertools.groupby(mu.parts)]


def c_factor(nu: Signature, params: Params) -> Scalar:
    """c(nu) = prod_k (s^2;q)_{n_k} / (q;q)_{n_k} over the multiplicities of nu."""

    nu.require_nonnegative()
    q, s = params.q, params.s
    result = q * 0 + 1
    for _, size in clusters(nu):
        result *= q_pochhammer(s * s, q, size) / q_pochhammer(q, q, size)
    return result


def enumerate_signatures(length: int, max_part: int) -> Iterator[Signature]:
    """All nonnegative signatures of ``length`` with parts <= ``max_part``, lexicographically."""

    if length < 0 or max_part < 0:
        raise ValueError("enumerate_signatures requires length, max_part >= 0.")

    def _generate(remaining: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in _generate(remaining - 1, first):
                yield (first,) + rest

    for parts in _generate(length, max_part):
        yield Signature(parts)


def count_signatures(length: int, max_part: int) -> int:
    return math.comb(length + max_part, length)


def bounded_signatures(
    lower: Sequence[int], upper: Sequence[int]
) -> Iterator[Signature]:
    """Signatures kappa with lower[i] <= kappa[i] <= upper[i], weakly decreasing."""

    if len(lower) != len(upper):
        raise SignatureError("Bounds must have equal length.")

    def _generate(index: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if index == len(lower):
            yield ()
            return
        top = min(upper[index], cap)
        for value in range(lower[index], top + 1):
            for rest in _generate(index + 1, value):
                yield (value,) + rest

    first_cap = max(upper) if upper else 0
    for parts in _generate(0, first_cap):
        yield Signature(parts)


def interlaces(top: Signature, bottom: Signature) -> bool:
    """top_1 >= bottom_1 >= top_2 >= ... in the F-row (len + 1) or G-row (equal) sense."""

    if len(top) not in (len(bottom), len(bottom) + 1):
        return False
    for i, value in enumerate(bottom.parts):
        if not top[i] >= value:
            return False
        if i + 1 < len(top) and top[i + 1] > value:
            return False
    return True
