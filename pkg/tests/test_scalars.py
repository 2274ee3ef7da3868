from __future__ import annotations

from fractions import Fraction

import pytest

from hlspin.scalars import (
    BackendMismatchError,
    Params,
    ParamsError,
    PoleError,
    backend_of,
    format_scalar,
    parse_scalar,
    parse_scalar_list,
    q_pochhammer,
    regularized_phi,
    sample_generic_params,
)


def test_parse_scalar_keeps_rationals_exact() -> None:
    assert parse_scalar("1/3") == Fraction(1, 3)
    assert parse_scalar(" -2/4 ") == Fraction(-1, 2)
    assert parse_scalar("0.25") == Fraction(1, 4)
    assert isinstance(parse_scalar("0.25"), Fraction)


def test_parse_scalar_reads_complex_literals() -> None:
    assert parse_scalar("0.5+0.25i") == complex(0.5, 0.25)
    assert parse_scalar("-i") == complex(0, -1)


def test_parse_scalar_rejects_garbage() -> None:
    with pytest.raises(ValueError):
        parse_scalar("one third")
    with pytest.raises(ValueError):
        parse_scalar("")


def test_scalar_lists_cannot_mix_backends() -> None:
    assert parse_scalar_list("") == []
    assert parse_scalar_list("1/2, 3") == [Fraction(1, 2), Fraction(3)]
    with pytest.raises(BackendMismatchError):
        parse_scalar_list("1/2,0.5+1i")
    with pytest.raises(BackendMismatchError):
        backend_of(Fraction(1, 2), 0.5j)


def test_format_scalar() -> None:
    assert format_scalar(Fraction(200, 81)) == "200/81"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(complex(1.5, -2.0)) == "1.5-2.0i"


def test_q_pochhammer_finite_and_negative_index() -> None:
    q = Fraction(1, 3)
    assert q_pochhammer(q, q, 0) == 1
    assert q_pochhammer(q, q, 2) == Fraction(2, 3) * Fraction(8, 9)
    x = Fraction(1, 2)
    # (x;q)_{-1} = 1/(1 - x/q)
    assert q_pochhammer(x, q, -1) == 1 / (1 - x / q)


def test_regularized_phi_with_zero_length_is_product_of_lower_pochhammers() -> None:
    q = Fraction(1, 3)
    value = regularized_phi(1, 0, [Fraction(2)], [Fraction(5)], q, q)
    assert value == 1


def test_params_reject_excluded_loci() -> None:
    with pytest.raises(ParamsError):
        Params.create(Fraction(1), Fraction(1, 5))
    with pytest.raises(ParamsError):
        Params.create(Fraction(1, 3), Fraction(0))
    # s^2 q^2 = 1 sits on the loci checked up to the depth
    with pytest.raises(ParamsError):
        Params.create(Fraction(1, 4), Fraction(4), depth=2)
    relaxed = Params.create(Fraction(0), Fraction(1, 5), relax=["q=0"])
    assert relaxed.q == 0
    assert "q=0" in relaxed.relaxations


def test_xi_and_its_pole(params: Params) -> None:
    assert params.xi(Fraction(2)) == Fraction(3)
    with pytest.raises(PoleError):
        params.xi(Fraction(5))


def test_generic_sampling_is_reproducible() -> None:
    first = sample_generic_params(7, 6, 2, count_v=1)
    second = sample_generic_params(7, 6, 2, count_v=1)
    assert first.params == second.params
    assert first.us == second.us
    assert len(first.us) == 2
    assert len(first.vs) == 1
    with pytest.raises(ValueError):
        sample_generic_params(7, 0, 1)
