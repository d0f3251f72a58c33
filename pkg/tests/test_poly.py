from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dodgson import (
    DivisorZeroError,
    InexactDivisionError,
    Poly,
    UnboundVariableError,
    parse_poly,
)

x = Poly.variable(0)
y = Poly.variable(1)


def frac(p, q=1):
    return Fraction(p, q)


# -- hypothesis strategies ------------------------------------------------------

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)


@st.composite
def polys(draw, max_vars=3, max_terms=4, max_exp=3):
    p = Poly.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        term = Poly.const(draw(coeffs))
        for var in range(max_vars):
            exp = draw(st.integers(0, max_exp))
            for _ in range(exp):
                term = term * Poly.variable(var)
        p = p + term
    return p


points = st.fixed_dictionaries({0: coeffs, 1: coeffs, 2: coeffs})


# -- construction and arithmetic -------------------------------------------------


def test_condensed_two_by_two_determinant():
    # the 2x2 determinant that shows up one step before the final division
    a = (1 - x) * (-x - 6) - 3 * (2 * x)
    assert a == x * x - x - 6
    assert a.to_text() == "x0^2 - x0 - 6"


def test_additive_identity():
    p = 3 * x * y - 7
    assert p + Poly.zero() == p


def test_difference_of_squares():
    assert (x + y) * (x - y) == x * x - y * y


def test_constant_helpers():
    assert Poly.const(0).is_zero()
    assert Poly.const("28.25").constant_value() == frac(113, 4)
    assert not Poly.const(2).variables()
    with pytest.raises(ValueError):
        (x + 1).constant_value()


# -- exact division ---------------------------------------------------------------


def test_exact_division_by_linear_divisor():
    num = x * x - x - 6
    den = -(x + 2)
    assert num.exact_div(den) == 3 - x


def test_exact_division_by_single_variable():
    num = Poly.const(frac(267, 4)) * x - Poly.const(frac(47, 12)) * x * x
    q = num.exact_div(x)
    assert q == Poly.const(frac(267, 4)) - Poly.const(frac(47, 12)) * x


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (x * x + 1).exact_div(x)


def test_division_by_zero_polynomial():
    with pytest.raises(DivisorZeroError):
        (x + 1).exact_div(Poly.zero())


def test_zero_dividend():
    assert Poly.zero().exact_div(x + 2).is_zero()


@settings(max_examples=150)
@given(polys(), polys())
def test_division_round_trip(p, d):
    if d.is_zero():
        return
    assert (p * d).exact_div(d) == p


# -- evaluation --------------------------------------------------------------------


def test_evaluation_at_limit_points():
    assert (213 - 55 * x).evaluate({0: frac(0)}) == 213
    assert (40 * x + 93).evaluate({0: frac(3)}) == 213
    z, w = Poly.variable(2), Poly.variable(3)
    p = (
        -24 * x * w
        + 184 * x
        + 128 * w
        + 24 * y * z
        - 136 * z
        - 176 * y
        + 16
    )
    assert p.evaluate({0: frac(0), 1: frac(0), 2: frac(0), 3: frac(0)}) == 16


def test_unbound_variable():
    with pytest.raises(UnboundVariableError):
        (x + y).evaluate({0: frac(1)})


def test_extra_bindings_are_ignored():
    assert (x + 1).evaluate({0: frac(2), 5: frac(9)}) == 3


@settings(max_examples=150)
@given(polys(), polys(), points)
def test_evaluation_is_a_homomorphism(p, q, sigma):
    assert (p * q).evaluate(sigma) == p.evaluate(sigma) * q.evaluate(sigma)
    assert (p + q).evaluate(sigma) == p.evaluate(sigma) + q.evaluate(sigma)


# -- zero test ----------------------------------------------------------------------


def test_zero_detection():
    assert Poly.zero().is_zero()
    assert (x - x).is_zero()
    assert not (4 * x).is_zero()


# -- ring axioms and structural invariants -------------------------------------------


@settings(max_examples=150)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=150)
@given(polys(), polys())
def test_no_zero_coefficients_survive(p, q):
    for result in (p + q, p - q, p * q):
        assert all(c != 0 for c in result.terms.values())
        assert all(all(e > 0 for _, e in mono) for mono in result.terms)


def test_degree():
    assert Poly.zero().degree() == 0
    assert Poly.const(5).degree() == 0
    assert (x * x * y + x).degree() == 3


# -- canonical text -------------------------------------------------------------------


def test_text_of_linear_polynomial():
    assert (-55 * x + 213).to_text() == "-55*x0 + 213"


def test_text_is_graded_lex_descending():
    z, w = Poly.variable(2), Poly.variable(3)
    p = 16 + 128 * w - 24 * x * w + 24 * y * z
    assert p.to_text() == "-24*x0*x3 + 24*x1*x2 + 128*x3 + 16"


def test_text_corner_cases():
    assert Poly.zero().to_text() == "0"
    assert Poly.const(frac(267, 4)).to_text() == "267/4"
    assert (-x).to_text() == "-x0"
    assert (x * x).to_text() == "x0^2"


@pytest.mark.parametrize(
    "bad", ["", "x", "2**x0", "x0^-1", "x0 +", "3..5", "x0*x0", "x0^2^2"]
)
def test_malformed_text_rejected(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@settings(max_examples=200)
@given(polys())
def test_text_round_trip(p):
    assert parse_poly(p.to_text()) == p
