from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.scalars import Params, q_pochhammer
from hlspin.signatures import (
    Signature,
    SignatureError,
    bounded_signatures,
    c_factor,
    clusters,
    count_signatures,
    enumerate_signatures,
    interlaces,
)


def test_parse_and_format() -> None:
    assert Signature.parse("2,1,0") == Signature.of(2, 1, 0)
    assert Signature.parse("(3, 3)") == Signature.of(3, 3)
    for empty in ("", "()", "∅"):
        assert Signature.parse(empty) == Signature()
    assert str(Signature.of(2, 0)) == "2,0"


def test_signatures_must_weakly_decrease() -> None:
    with pytest.raises(SignatureError):
        Signature.of(0, 1)
    with pytest.raises(SignatureError):
        Signature.parse("a,b")


def test_basic_statistics() -> None:
    sig = Signature.of(3, 1, 1, 0)
    assert sig.size == 5
    assert sig.largest == 3
    assert sig.zero_count == 1
    assert sig.multiplicity(1) == 2
    assert sig.nonzero() == Signature.of(3, 1, 1)
    assert sig.shifted(-1) == Signature.of(2, 0, 0, -1)
    assert Signature.of(2).padded(3) == Signature.of(2, 0, 0)
    assert clusters(sig) == [(3, 1), (1, 2), (0, 1)]
    with pytest.raises(SignatureError):
        sig.shifted(-1).require_nonnegative()


def test_enumeration_counts_and_order() -> None:
    listed = list(enumerate_signatures(2, 2))
    assert [str(sig) for sig in listed] == ["0,0", "1,0", "1,1", "2,0", "2,1", "2,2"]
    assert count_signatures(2, 2) == 6
    assert len(list(enumerate_signatures(3, 4))) == count_signatures(3, 4)
    assert list(enumerate_signatures(0, 5)) == [Signature()]
    with pytest.raises(ValueError):
        list(enumerate_signatures(-1, 2))


def test_bounded_signatures_respect_both_bounds() -> None:
    found = list(bounded_signatures([1, 0], [2, 1]))
    assert found == [
        Signature.of(1, 0),
        Signature.of(1, 1),
        Signature.of(2, 0),
        Signature.of(2, 1),
    ]


def test_interlacing() -> None:
    assert interlaces(Signature.of(3, 1), Signature.of(2))
    assert not interlaces(Signature.of(3, 3), Signature.of(2))
    assert interlaces(Signature.of(3, 1), Signature.of(2, 0))
    assert not interlaces(Signature.of(3, 1, 0, 0), Signature.of(2))


def test_c_factor_uses_multiplicities(params: Params) -> None:
    q, s = params.q, params.s
    expected = (q_pochhammer(s * s, q, 2) / q_pochhammer(q, q, 2)) * (
        q_pochhammer(s * s, q, 1) / q_pochhammer(q, q, 1)
    )
    assert c_factor(Signature.of(2, 2, 0), params) == expected
    assert c_factor(Signature(), params) == 1
    assert c_factor(Signature.of(1, 0), Params.create(Fraction(1, 2), Fraction(1, 3))) == (
        (1 - Fraction(1, 9)) / Fraction(1, 2)
    ) ** 2
