from fractions import Fraction
from math import perm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from changhee.algebra import (
    ONE, X, ZERO, DimensionError, Mat, Polynomial, format_polynomial, format_rational,
    mat_mul, parse_polynomial, parse_rational, poly_binom, poly_eval,
)
from changhee.matrices import build_matrix

rationals = st.fractions(max_denominator=30).map(lambda f: f.limit_denominator(30))
polys = st.lists(rationals, max_size=6).map(Polynomial)


@given(a=rationals, b=rationals, c=rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1
    assert a.denominator > 0


def test_poly_binom_examples():
    assert poly_binom(0) == ONE
    assert poly_binom(2) == Polynomial([0, Fraction(-1, 2), Fraction(1, 2)])
    assert poly_eval(poly_binom(3), 5) == Fraction(perm(5, 3), 6)
    assert poly_binom(4).leading == Fraction(1, 24)


@pytest.mark.parametrize("j", range(9))
def test_poly_binom_vanishes_below_j(j):
    p = poly_binom(j)
    assert p.degree == j
    assert all(poly_eval(p, m) == 0 for m in range(j))
    assert poly_eval(p, j) == 1


def test_poly_eval_examples():
    assert poly_eval(parse_polynomial("x^2 - 2*x + 1/2"), 0) == Fraction(1, 2)
    assert poly_eval(ZERO, Fraction(7, 3)) == 0
    assert poly_eval(X - Fraction(1, 2), Fraction(1, 2)) == 0


@given(p=polys, q=polys)
def test_degree_is_additive(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(p=polys, q=polys, v=rationals)
def test_eval_is_a_ring_map(p, q, v):
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
    assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)


@given(p=polys, c=rationals, v=rationals)
def test_substitutions(p, c, v):
    assert poly_eval(p.shift(c), v) == poly_eval(p, v + c)
    assert poly_eval(p.reflect(), v) == poly_eval(p, -v)
    assert poly_eval(p.scale(c), v) == poly_eval(p, c * v)


def test_zero_polynomial_canonical_form():
    assert ZERO.coeffs == ()
    assert ZERO.degree is None
    assert Polynomial([0, 0, 0]) == ZERO
    assert str(ZERO) == "0"


@pytest.mark.parametrize("text", [
    "x^3 - 3/2*x^2 + 1/4", "-x", "-3", "0", "1/2*x", "x^4 - 8*x^3 + 18*x^2 - 8*x - 9/2",
])
def test_canonical_text_round_trip(text):
    assert format_polynomial(parse_polynomial(text)) == text


@given(p=polys)
def test_format_parse_round_trip(p):
    assert parse_polynomial(format_polynomial(p)) == p


@pytest.mark.parametrize("bad", ["", "3x", "x^", "1//2", "x+*2", "y"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_polynomial(bad)


def test_rational_text():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(8, 4)) == "2"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1.5")


def _rows(m):
    return [[format_polynomial(e) for e in r] for r in m.to_rows()]


def test_mat_mul_reproduces_worked_products():
    s1, s2 = build_matrix("S1", 5, 5), build_matrix("S2", 5, 5)
    e, ch = build_matrix("EULER", 5, 5), build_matrix("CH1", 5, 5)
    assert mat_mul(s1, e) == ch
    assert mat_mul(s2, ch) == e
    assert _rows(mat_mul(s1, e))[4][1:] == ["3/2", "15/2", "45/2", "105/2"]


def test_identity_is_neutral():
    m = build_matrix("CH2", 4, 3, "polynomials")
    assert mat_mul(Mat.identity(4), m) == m
    assert mat_mul(m, Mat.identity(3)) == m


def test_dimension_mismatch_is_reported():
    with pytest.raises(DimensionError):
        mat_mul(Mat.identity(3), Mat.identity(4))
    with pytest.raises(DimensionError):
        Mat(2, 2, [ONE])


small_entries = st.lists(rationals, min_size=1, max_size=3).map(Polynomial)


def matrices(r, c):
    return st.lists(small_entries, min_size=r * c, max_size=r * c).map(lambda es: Mat(r, c, es))


@given(a=matrices(2, 3), b=matrices(3, 2), c=matrices(2, 2))
def test_mat_mul_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
