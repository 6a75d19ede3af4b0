from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cstriplets.exact import (
    ExactScalar,
    GaussianRational,
    double_factorial,
    factorial,
    general_binomial,
    half_angle_integral,
    multinomial,
    rising_product,
)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    # iterative-product oracle, frozen
    prod = 1
    for k in range(1, 21):
        prod *= k
    assert factorial(20) == prod == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_double_factorial_values():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    with pytest.raises(ValueError):
        double_factorial(-2)


@pytest.mark.parametrize("n", range(1, 31))
def test_double_factorial_product_identity(n):
    assert double_factorial(n) * double_factorial(n - 1) == factorial(n)


def test_multinomial_values():
    assert multinomial(4, [2, 2]) == 6
    assert multinomial(3, []) == 1
    assert multinomial(6, [1, 2]) == factorial(6) // (factorial(3) * factorial(1) * factorial(2))
    assert multinomial(6, [1, 2]) == 60
    assert multinomial(2, [3]) == 0  # reciprocal factorial convention


@pytest.mark.parametrize("n", range(0, 31, 5))
def test_multinomial_is_binomial(n):
    for k in range(n + 1):
        assert multinomial(n, [k]) == factorial(n) // (factorial(k) * factorial(n - k))


@given(st.integers(0, 12), st.integers(0, 12))
def test_half_angle_symmetry(p, q):
    a = half_angle_integral(p, q)
    b = half_angle_integral(q, p)
    assert (a.value, a.pi_power) == (b.value, b.pi_power)


def test_half_angle_values():
    assert half_angle_integral(0, 0) == ExactScalar(Fraction(1, 2), 1)
    assert half_angle_integral(1, 1) == ExactScalar(Fraction(1, 2), 0)
    # Beta-function oracle: B(3/2, 1/2)/2 = pi/4
    assert half_angle_integral(2, 0) == ExactScalar(Fraction(1, 4), 1)


def test_half_angle_pi_power_rule():
    for p in range(6):
        for q in range(6):
            val = half_angle_integral(p, q)
            assert val.pi_power == (1 if p % 2 == 0 and q % 2 == 0 else 0)


def test_exact_scalar_rejects_mixed_pi_powers():
    with pytest.raises(ValueError):
        ExactScalar(Fraction(1), 0) + ExactScalar(Fraction(1), 1)


def test_exact_scalar_arithmetic():
    a = ExactScalar(Fraction(2, 3), 1)
    b = ExactScalar(Fraction(1, 3), 1)
    assert a + b == ExactScalar(Fraction(1), 1)
    assert a * b == ExactScalar(Fraction(2, 9), 2)
    assert (a * 3).value == 2


def test_rising_and_general_binomial():
    assert rising_product(3, 4) == 3 * 4 * 5 * 6
    assert rising_product(Fraction(1, 2), 2) == Fraction(3, 4)
    assert general_binomial(-2, 3) == Fraction(-4)
    assert general_binomial(5, 2) == 10
    assert general_binomial(5, 7) == 0


@given(
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
)
def test_gaussian_rational_field_ops(ar, ai, br, bi):
    a = GaussianRational(ar, ai)
    b = GaussianRational(br, bi)
    assert (a + b) - b == a
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not b.is_zero:
        assert (a / b) * b == a


def test_gaussian_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(Fraction(1)) / GaussianRational(Fraction(0))
