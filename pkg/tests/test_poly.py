from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from domipoly.errors import (
    DivisionByMonomialFailed,
    NonUnitConstantTerm,
    PolynomialParseError,
    RemainderNonZero,
)
from domipoly.poly import (
    ONE,
    ONE_MINUS_X_MINUS_Y,
    X,
    Y,
    ZERO,
    BivariatePolynomial,
    UnivariatePolynomial,
    coefficient_slice,
    divide_exact,
    eval_rational,
    parse_polynomial,
    power,
    substitute_monomials,
    to_canonical_string,
)


def test_canonical_form_drops_zeros():
    p = BivariatePolynomial({(1, 0): 0, (0, 1): 3, (2, 2): 0})
    assert p.terms == {(0, 1): 3}
    assert BivariatePolynomial({(0, 0): 0}) == ZERO
    assert ZERO.is_zero()


def test_repeated_keys_accumulate():
    p = BivariatePolynomial([((1, 1), 2), ((1, 1), -2), ((0, 0), 5)])
    assert p == BivariatePolynomial.constant(5)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BivariatePolynomial({(-1, 0): 1})


@pytest.mark.parametrize(
    "p, text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (ONE + X, "1 + x"),
        ((X + Y) ** 2 - Y**2 + ONE, "1 + 2*x*y + x^2"),
        (ONE - X - Y, "1 - y - x"),
        (-X * Y * 3 + X**3, "-3*x*y + x^3"),
        (Y.shift(0, 1) * 7, "7*y^2"),
    ],
)
def test_canonical_string(p, text):
    assert to_canonical_string(p) == text
    assert parse_polynomial(text) == p


def test_graded_order_total_degree_then_x_degree():
    p = X * Y + Y**2 + X**2 + Y + X + ONE
    assert [e for e, _ in p.sorted_terms()] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_parse_whitespace_and_repeats():
    assert parse_polynomial(" 2 * x*y -x^2+ x^2 ") == X * Y * 2
    assert parse_polynomial("-1") == BivariatePolynomial.constant(-1)


@pytest.mark.parametrize("bad", ["", "x^", "1 +", "2**x", "z", "x^-1", "3x", "+", "x*x"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(bad)


def test_closed_form_complete_graph_small():
    # J(K_2) by hand: {} -> 1, {a},{b} -> xy each, {a,b} -> x^2
    assert (X + Y) ** 2 - Y**2 + ONE == parse_polynomial("1 + 2*x*y + x^2")


def test_divide_exact_examples():
    assert divide_exact(ONE_MINUS_X_MINUS_Y * (X + Y * 3), ONE_MINUS_X_MINUS_Y) == X + Y * 3
    assert divide_exact(ZERO, ONE_MINUS_X_MINUS_Y) == ZERO
    with pytest.raises(RemainderNonZero):
        divide_exact(X, ONE_MINUS_X_MINUS_Y)
    with pytest.raises(NonUnitConstantTerm):
        divide_exact(X, ONE * 2 - X)
    with pytest.raises(NonUnitConstantTerm):
        divide_exact(X, X + Y)
    assert divide_exact(X * 2, -ONE) == X * -2


def test_divide_by_monomial():
    assert (X**3 * Y + X**2).divide_by_monomial(2, 0) == X * Y + ONE
    with pytest.raises(DivisionByMonomialFailed):
        (X**3 + Y).divide_by_monomial(1, 0)


def test_substitute_and_slice():
    # J(P3; t*y, y): coefficient of y^3 is t + 3t^2 + t^3
    j_p3 = parse_polynomial("1 + 2*x*y + x*y^2 + 3*x^2*y + x^3")
    sub = substitute_monomials(j_p3, (1, 1), (0, 1))
    assert coefficient_slice(sub, 3) == UnivariatePolynomial.parse("t + 3*t^2 + t^3")


def test_eval_rational():
    p = parse_polynomial("1 + 2*x*y + x^2")
    assert eval_rational(p, Fraction(1, 2), 3) == Fraction(1) + 3 + Fraction(1, 4)


def test_json_roundtrip_big_coefficients():
    p = X * (10**40) - Y * 3
    data = p.to_json()
    assert data == [[0, 1, "-3"], [1, 0, str(10**40)]]
    assert BivariatePolynomial.from_json(data) == p


def test_univariate_basics():
    t = UnivariatePolynomial({1: 1})
    one = UnivariatePolynomial({0: 1})
    assert ((one + t) ** 3 - one).to_string() == "3*t + 3*t^2 + t^3"
    assert UnivariatePolynomial().to_string() == "0"
    assert (one + t)(1) == 2
    assert UnivariatePolynomial.from_coefficients([0, 2, 0, 1]).degree() == 3
    u = UnivariatePolynomial.parse("t - 2*t^4")
    assert UnivariatePolynomial.from_json(u.to_json()) == u


# -- properties ---------------------------------------------------------------


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p and p + ZERO == p


@given(polys())
def test_string_roundtrip(p):
    assert parse_polynomial(to_canonical_string(p)) == p


@given(polys())
def test_json_roundtrip(p):
    assert BivariatePolynomial.from_json(p.to_json()) == p


@given(polys(), st.integers(0, 4))
def test_power_matches_repeated_product(p, k):
    expect = ONE
    for _ in range(k):
        expect = expect * p
    assert power(p, k) == expect == p**k


@given(polys(max_deg=5, max_terms=8))
def test_division_inverts_multiplication(q):
    assert divide_exact(q * ONE_MINUS_X_MINUS_Y, ONE_MINUS_X_MINUS_Y) == q


@given(polys(max_deg=3), polys(max_deg=2))
def test_division_by_general_unit_divisor(q, d):
    d = d - BivariatePolynomial.constant(d.coeff(0, 0)) + ONE
    assert divide_exact(q * d, d) == q


@given(polys(max_deg=4), st.integers(-3, 3), st.integers(-3, 3))
def test_division_detects_remainder(q, a, b):
    num = q * ONE_MINUS_X_MINUS_Y + X**a.__abs__() * Y ** abs(b) * (1 if a >= 0 else -1)
    # adding a monomial breaks divisibility: monomials are never multiples of 1-x-y
    with pytest.raises(RemainderNonZero):
        divide_exact(num, ONE_MINUS_X_MINUS_Y)


@given(polys(), st.fractions(max_denominator=7), st.fractions(max_denominator=7))
def test_evaluation_is_homomorphism(p, xv, yv):
    q = p * p + X
    assert eval_rational(q, xv, yv) == eval_rational(p, xv, yv) ** 2 + xv


@given(polys(), st.integers(0, 3), st.integers(0, 3))
def test_shift_then_divide(p, a, b):
    assert p.shift(a, b).divide_by_monomial(a, b) == p
    assert p.shift(a, b) == p * X**a * Y**b
