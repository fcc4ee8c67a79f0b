from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import long_division, schoolbook_product
from zetalab.errors import InvalidInput
from zetalab.exactnum import (
    CyclotomicNumber,
    Polynomial,
    TruncatedSeries,
    cyclo_reduce,
    cyclotomic_polynomial,
    format_rational,
    parse_rational,
    series_inverse,
    series_mul,
)
from zetalab.modular import discriminant_series, eisenstein_series

big_ints = st.integers(min_value=-(2**256), max_value=2**256)
rationals = st.builds(Fraction, big_ints, st.integers(min_value=1, max_value=2**256))


@given(rationals, rationals, rationals)
def test_rationals_form_a_field(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@pytest.mark.parametrize("text,value", [("-1/30", Fraction(-1, 30)), ("7", Fraction(7)), (" 4/6 ", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5"])
def test_parse_rational_rejects(bad):
    with pytest.raises(InvalidInput):
        parse_rational(bad)


@given(rationals)
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_drops_unit_denominator():
    assert format_rational(Fraction(6, 3)) == "2"


# -- polynomials ------------------------------------------------------------


def test_polynomial_strips_and_prints():
    p = Polynomial((Fraction(-1, 30), 0, 1, -2, 1, 0, 0))
    assert p.degree == 4
    assert str(p) == "x^4 - 2*x^3 + x^2 - 1/30"
    assert Polynomial.from_json(p.to_json()) == p


def test_polynomial_divmod():
    x = Polynomial.x()
    q, r = (x * x * x - 1).divmod(x - 1)
    assert q == x * x + x + 1
    assert r.is_zero()


# -- series -----------------------------------------------------------------


def test_difference_of_squares():
    a = TruncatedSeries.from_list([1, 1, 0, 0])
    b = TruncatedSeries.from_list([1, -1, 0, 0])
    assert series_mul(a, b).coefficients == (1, 0, -1, 0)


def test_identity():
    a = TruncatedSeries.from_list([3, Fraction(1, 2), -7])
    assert series_mul(a, TruncatedSeries.one(3)) == a


def test_product_matches_schoolbook():
    e4 = eisenstein_series(2, 10).series
    expect = schoolbook_product(list(e4.coefficients), list(e4.coefficients), 10)
    assert list(series_mul(e4, e4).coefficients) == expect


def test_geometric_inverse():
    inv = series_inverse(TruncatedSeries.from_list([1, -1, 0, 0, 0, 0]))
    assert inv.coefficients == (1,) * 6


def test_inverse_of_delta_over_q_matches_long_division():
    d = discriminant_series(8).shift(-1)
    assert list(series_inverse(d).coefficients[:5]) == long_division([1], list(d.coefficients), 5)


def test_inverse_rejects_zero_leading_coefficient():
    with pytest.raises(InvalidInput):
        series_inverse(TruncatedSeries.from_list([0, 1, 2]))


def test_truncation_order_rules():
    a = TruncatedSeries(-1, (1, 2, 3), 2)
    b = TruncatedSeries.from_list([1, 5, 6, 7, 8])
    prod = series_mul(a, b)
    assert prod.leading_exponent == -1
    assert prod.truncation_order == 2  # min(2 + 0, 5 - 1)
    inv = series_inverse(a)
    assert (inv.leading_exponent, inv.truncation_order) == (1, 4)  # T - 2l = 2 + 2


def test_coefficients_beyond_truncation_are_unknown():
    a = TruncatedSeries.from_list([1, 2])
    with pytest.raises(IndexError):
        a[2]
    assert a[-3] == 0


def test_series_validates_length():
    with pytest.raises(InvalidInput):
        TruncatedSeries(0, (1, 2), 3)


def test_series_json_round_trip():
    s = TruncatedSeries(-1, (1, Fraction(-2, 3), 0), 2)
    assert TruncatedSeries.from_json(s.to_json()) == s


series_lists = st.lists(st.fractions(max_denominator=50).map(Fraction), min_size=1, max_size=8)


@given(series_lists, series_lists, st.integers(-2, 2), st.integers(-2, 2))
def test_series_mul_commutes(a, b, la, lb):
    x = TruncatedSeries.from_list(a, la)
    y = TruncatedSeries.from_list(b, lb)
    assert series_mul(x, y) == series_mul(y, x)


@given(series_lists, series_lists, series_lists)
def test_series_mul_associates(a, b, c):
    x, y, z = (TruncatedSeries.from_list(v) for v in (a, b, c))
    assert series_mul(series_mul(x, y), z) == series_mul(x, series_mul(y, z))


@given(series_lists)
def test_series_times_inverse_is_one(a):
    if a[0] == 0:
        a[0] = Fraction(1)
    x = TruncatedSeries.from_list(a)
    assert series_mul(x, series_inverse(x)) == TruncatedSeries.one(len(a))


# -- cyclotomic numbers -------------------------------------------------------


def test_level_four_square_of_root():
    assert cyclo_reduce(4, Polynomial((0, 0, 1))) == CyclotomicNumber.rational(-1, 4)


def test_level_three_square_of_root():
    assert cyclo_reduce(3, Polynomial((0, 0, 1))).coefficients == (-1, -1)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_reduces_to_zero(n):
    assert cyclo_reduce(n, Polynomial(cyclotomic_polynomial(n))).is_zero()


level5 = st.lists(st.fractions(max_denominator=20), min_size=4, max_size=4).map(
    lambda c: CyclotomicNumber(5, tuple(c))
)


@given(level5, level5, level5)
def test_cyclotomic_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_roots_of_unity_have_the_right_order():
    z = CyclotomicNumber.root(12, 1)
    acc = CyclotomicNumber.rational(1, 12)
    for k in range(1, 13):
        acc = acc * z
        assert (acc == 1) == (k == 12)


def test_mixed_levels_lift():
    i = CyclotomicNumber.root(4, 1)
    w = CyclotomicNumber.root(3, 1)
    prod = i * w
    assert prod.level == 12
    assert complex(prod) == pytest.approx(1j * complex(w))


def test_cyclotomic_json_round_trip():
    z = CyclotomicNumber(8, (1, Fraction(1, 2), 0, -3))
    assert CyclotomicNumber.from_json(z.to_json()) == z
