import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st
from sympy import QQ

from jordan_star.exactnum.matrices import rational_array, rational_identity, rational_inverse, ring_zero, trace
from jordan_star.exactnum.scalar import (
    NotDivisible,
    Scalar,
    as_scalar,
    format_gaussian,
    format_rational,
    gaussian,
    rational,
)

nu = Scalar.nu(1)

laurent = st.dictionaries(
    st.integers(min_value=-2, max_value=2),
    st.integers(min_value=-5, max_value=5),
    max_size=4,
).map(Scalar)

nonzero_monomial = st.tuples(
    st.integers(min_value=-5, max_value=5).filter(bool),
    st.integers(min_value=-2, max_value=2),
).map(lambda ck: Scalar.monomial(ck[0], ck[1]))


@pytest.mark.parametrize(
    "value, expected",
    [("3/6", QQ(1, 2)), (4, QQ(4)), (Fraction(-2, 8), QQ(-1, 4)), (" 7 ", QQ(7))],
)
def test_rational_coercion(value, expected):
    assert rational(value) == expected


def test_rational_rejects_booleans_and_imaginary():
    with pytest.raises(TypeError):
        rational(True)
    with pytest.raises(ValueError):
        rational(gaussian(0, 1))


def test_formatting():
    assert format_rational(QQ(1, 2)) == "1/2"
    assert format_rational(QQ(4, 2)) == "2"
    assert format_gaussian(gaussian(0, 1)) == "i"
    assert format_gaussian(gaussian(1, -2)) == "(1 - 2*i)"
    assert str(Scalar.monomial(QQ(1, 2), -1) + 1) == "1 + 1/2*nu^-1"
    assert str(Scalar.zero()) == "0"


def test_laurent_product_and_exact_division():
    assert (nu + 1) * (nu - 1) == nu**2 - 1
    assert (nu**2 - 1) / (nu - 1) == nu + 1
    assert (nu + 2) / Scalar.nu(-1) == nu**2 + nu * 2
    with pytest.raises(NotDivisible):
        nu / (nu + 1)
    with pytest.raises(NotDivisible):
        nu / Scalar.zero()


def test_reflect_and_evaluate():
    s = nu + Scalar.nu(-1) + 2
    assert s.reflect_nu() == -nu - Scalar.nu(-1) + 2
    assert s.evaluate(1) == gaussian(4)
    assert (Scalar.imaginary_unit() * nu).evaluate(2) == gaussian(0, 2)
    with pytest.raises(NotDivisible):
        s.evaluate(0)
    assert (nu * 3).substitute_nu(QQ(1, 3)) == 1


def test_as_scalar_accepts_strings_but_not_floats():
    assert as_scalar("2/3") == Scalar.constant(QQ(2, 3))
    with pytest.raises(TypeError):
        as_scalar(0.5)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Scalar.zero()


@given(laurent, nonzero_monomial)
def test_division_inverts_multiplication(a, b):
    assert (a * b) / b == a


@settings(max_examples=50)
@given(laurent, laurent)
def test_reflection_is_a_ring_involution(a, b):
    assert (a * b).reflect_nu() == a.reflect_nu() * b.reflect_nu()
    assert a.reflect_nu().reflect_nu() == a


def test_exact_matrices():
    m = rational_array([[2, 1], [1, 1]])
    inv = rational_inverse(m)
    assert all(x == y for x, y in zip((m @ inv).flat, rational_identity(2).flat))
    assert trace(m) == QQ(3)
    with pytest.raises(ValueError):
        rational_inverse(rational_array([[1, 2], [2, 4]]))


def test_ring_zero_keeps_scalar_type():
    assert ring_zero(nu, QQ(2)) == Scalar.zero()
