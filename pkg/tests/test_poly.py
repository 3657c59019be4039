from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallbase.lie.poly import IntPolynomial, RationalExpr, cyclotomic_like, q_power

q = IntPolynomial.q()
coeff_lists = st.lists(st.integers(-50, 50), max_size=7)


def test_square():
    assert (q + 1) ** 2 == IntPolynomial([1, 2, 1])
    assert str((q + 1) ** 2) == "q^2 + 2*q + 1"


def test_shift_example():
    shifted = (q**2 - 4).shift(2)
    assert shifted == IntPolynomial([0, 4, 1])
    assert all(c >= 0 for c in shifted.coeffs) and shifted.coeffs[0] == 0


def test_product_example():
    assert cyclotomic_like(5) * cyclotomic_like(9) == q_power(14) - q_power(9) - q_power(5) + 1
    assert cyclotomic_like(3, -1) == q**3 + 1


def test_zero_and_degree():
    z = IntPolynomial([0, 0])
    assert z.is_zero() and z.degree == -1 and str(z) == "0"
    assert (q - q).is_zero()
    assert IntPolynomial([3, 0, -2]).leading == -2


def test_string_forms():
    assert str(IntPolynomial([-1, 0, -3])) == "-3*q^2 - 1"
    assert str(q) == "q"


@given(coeff_lists, coeff_lists, st.integers(-20, 20))
def test_arithmetic_agrees_with_evaluation(a, b, x):
    A, B = IntPolynomial(a), IntPolynomial(b)
    assert (A + B)(x) == A(x) + B(x)
    assert (A - B)(x) == A(x) - B(x)
    assert (A * B)(x) == A(x) * B(x)
    assert (A**3)(x) == A(x) ** 3


@given(coeff_lists, st.integers(-10, 10), st.integers(-10, 10))
def test_shift_agrees_with_evaluation(a, q0, t):
    A = IntPolynomial(a)
    assert A.shift(q0)(t) == A(q0 + t)


def test_rational_expression():
    r = RationalExpr(q + 1, q**2, label="(q+1)/q^2")
    assert str(r) == "(q+1)/q^2"
    assert r.canonical() == "(q + 1) / (q^2)"
    assert r.evaluate(2) == Fraction(3, 4)
    assert (r * r).evaluate(3) == Fraction(16, 81)
    assert (r ** -1).evaluate(2) == Fraction(4, 3)
    assert (r + 1).evaluate(2) == Fraction(7, 4)
    assert (1 - r).evaluate(2) == Fraction(1, 4)
    assert (r / (q + 1)).evaluate(5) == Fraction(1, 25)
    with pytest.raises(ZeroDivisionError):
        RationalExpr(q, 0)


def test_negative_power_of_polynomial_rejected():
    with pytest.raises(ValueError):
        q ** -1
