from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from geoforge.numeric import (
    GaussianRational as G,
    conjugate,
    format_rational,
    gauss_arith,
    inner_product,
    norm_sq,
    parse_gaussian,
    parse_rational,
    rat_normalize,
    unimodular_from_parameter,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)
gaussians = st.builds(G, rationals, rationals)


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, Fr(1, 2)), (0, 5, Fr(0)), (3, -6, Fr(-1, 2))],
)
def test_rat_normalize(num, den, expected):
    r = rat_normalize(num, den)
    assert r == expected
    assert r.denominator > 0


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)


def test_rational_text_form():
    assert format_rational(Fr(-1, 2)) == "-1/2"
    assert format_rational(Fr(4, 2)) == "2"
    assert parse_rational("-3/6") == Fr(-1, 2)
    with pytest.raises(ValueError):
        parse_rational("0.5")


@pytest.mark.parametrize(
    "a, b, op, expected",
    [
        (G(1, 1), G(1, -1), "mul", G(2)),
        (G(1, 1), G(1, -1), "div", G(0, 1)),
        (G(2, 4), G(-4), "div", G(Fr(-1, 2), -1)),
        (G(2, 4), G(-4), "add", G(-2, 4)),
        (G(2, 4), G(-4), "sub", G(6, 4)),
    ],
)
def test_gauss_arith(a, b, op, expected):
    assert gauss_arith(a, b, op) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gauss_arith(G(1), G(0), "div")


def test_conjugate_and_norm():
    assert conjugate(G(2, 3)) == G(2, -3)
    assert norm_sq(G(2, 4)) == 20
    assert norm_sq(G(0)) == 0


@pytest.mark.parametrize(
    "a, b, expected",
    [(G(1), G(0, 1), 0), (G(1, 2), G(1, 2), 5), (G(2, 1), G(3, -1), 5)],
)
def test_inner_product(a, b, expected):
    assert inner_product(a, b) == expected


@pytest.mark.parametrize(
    "t, expected",
    [(0, G(1)), (1, G(0, 1)), (Fr(1, 2), G(Fr(3, 5), Fr(4, 5)))],
)
def test_unimodular_from_parameter(t, expected):
    assert unimodular_from_parameter(t) == expected


def test_gaussian_text_round_trip():
    for z in (G(2), G(Fr(-1, 2), -1), G(0, Fr(7, 3))):
        assert parse_gaussian(str(z)) == z
    assert str(G(2, 4)) == "2+4*i"


@given(gaussians, gaussians)
def test_inner_product_matches_complex_form(a, b):
    complex_form = (a * conjugate(b) + conjugate(a) * b) / 2
    assert complex_form.im == 0
    assert inner_product(a, b) == complex_form.re


@given(rationals)
def test_unimodular_norm_is_exactly_one(t):
    assert norm_sq(unimodular_from_parameter(t)) == 1


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert norm_sq(a * b) == norm_sq(a) * norm_sq(b)


@given(gaussians)
def test_norm_is_product_with_conjugate(a):
    n = a * conjugate(a)
    assert n.im == 0 and n.re == norm_sq(a) >= 0
