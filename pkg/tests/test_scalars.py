from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gzlie.scalars import (QI, Jet, ZERO, ONE, I, rat, qi,
                           parse_scalar, format_scalar)

rationals = st.fractions(max_denominator=50)
scalars = st.builds(qi, rationals, rationals)


def test_parse_basic_forms():
    assert parse_scalar("3") == qi(3)
    assert parse_scalar("-1/2") == qi(Fraction(-1, 2))
    assert parse_scalar("1/2+3*i") == qi(Fraction(1, 2), 3)
    assert parse_scalar("-1/2*i") == qi(0, Fraction(-1, 2))
    assert parse_scalar("2-1/3*i") == qi(2, Fraction(-1, 3))
    assert parse_scalar("0") == ZERO
    assert parse_scalar("i") == I
    assert parse_scalar("-i") == -I


@pytest.mark.parametrize("bad", ["", "x", "1/2/3", "2i+3", "1 + ", "/3"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(scalars)
def test_format_parse_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


def test_format_canonical():
    assert format_scalar(ZERO) == "0"
    assert format_scalar(qi(3)) == "3"
    assert format_scalar(qi(0, 1)) == "1*i"
    assert format_scalar(qi(Fraction(1, 2), 3)) == "1/2+3*i"
    assert format_scalar(qi(1, Fraction(-1, 2))) == "1-1/2*i"


@given(scalars, scalars, scalars)
@settings(max_examples=50)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    if b:
        assert (a / b) * b == a


def test_division_and_conjugate():
    z = qi(1, 2)
    assert z * z.conj() == qi(5)
    assert (ONE / z) * z == ONE
    assert I * I == -ONE
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_powers():
    assert qi(1, 1) ** 2 == qi(0, 2)
    assert I ** 4 == ONE
    assert qi(2) ** 0 == ONE


def test_jet_derivative_of_product_and_quotient():
    # f(t) = (2+t)(3-t) at t=0: value 6, derivative 1
    a = Jet(qi(2), ONE)
    b = Jet(qi(3), -ONE)
    p = a * b
    assert p.val == qi(6) and p.eps == ONE
    q = a / b
    assert q.val == qi(2) / qi(3)
    # (a/b)' = (a'b - ab')/b^2 = (3 + 2)/9
    assert q.eps == qi(5) / qi(9)


def test_jet_matches_symbolic_two_by_two_determinant():
    # d/dt det(x + t v) at t=0 expanded by hand for 2x2
    x = [[qi(1), qi(2)], [qi(3), qi(4)]]
    v = [[qi(5), qi(-1)], [qi(2), qi(7)]]
    jets = [[Jet(x[i][j], v[i][j]) for j in range(2)] for i in range(2)]
    detj = jets[0][0] * jets[1][1] - jets[0][1] * jets[1][0]
    hand = (x[0][0] * v[1][1] + v[0][0] * x[1][1]
            - x[0][1] * v[1][0] - v[0][1] * x[1][0])
    assert detj.val == x[0][0] * x[1][1] - x[0][1] * x[1][0]
    assert detj.eps == hand


def test_rational_helpers():
    assert rat(1, 2) + rat(1, 2) == ONE
    assert qi(1, 1).is_rational() is False
    assert rat(7).as_fraction() == Fraction(7)
    with pytest.raises(ValueError):
        qi(0, 1).as_fraction()
