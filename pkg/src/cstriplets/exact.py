"""Exact rational and combinatorial arithmetic shared by every other module.

All closed-form coefficients in this package are rationals, optionally
scaled by an integer power of pi.  Nothing in this module touches floating
point; conversions to float happen at the very edge (reporting, numerics).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Rationals are plain ``fractions.Fraction`` values: always reduced, positive
# denominator, arbitrary precision.
Rational = Fraction


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial undefined for n={n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """Exact n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def multinomial(top: int, parts: list[int] | tuple[int, ...]) -> int:
    """top! / ((top - sum(parts))! * prod(parts_i!)).

    Returns 0 when sum(parts) > top (the reciprocal factorial of a negative
    integer vanishes); callers that consider that case an error must check
    the precondition themselves.
    """
    if top < 0:
        raise ValueError(f"multinomial needs top >= 0, got {top}")
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative, got {parts}")
    rest = top - sum(parts)
    if rest < 0:
        return 0
    result = factorial(top) // factorial(rest)
    for p in parts:
        result //= factorial(p)
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_product(a: Fraction | int, k: int) -> Fraction:
    """a (a+1) ... (a+k-1); equals (a+k-1)!/(a-1)! for integer a >= 1."""
    if k < 0:
        raise ValueError("rising_product needs k >= 0")
    result = Fraction(1)
    for t in range(k):
        result *= Fraction(a) + t
    return result


def general_binomial(alpha: Fraction | int, k: int) -> Fraction:
    """Binomial coefficient C(alpha, k) for rational alpha >= any sign."""
    if k < 0:
        raise ValueError("general_binomial needs k >= 0")
    num = Fraction(1)
    for t in range(k):
        num *= Fraction(alpha) - t
    return num / factorial(k)


@dataclass(frozen=True)
class ExactScalar:
    """A rational multiple of an integer power of pi.

    Addition of mismatched pi powers is rejected rather than coerced: the
    volume factors carried by angular integrals must cancel exactly, and a
    mixed-power sum is always a bookkeeping bug upstream.
    """

    value: Fraction
    pi_power: int = 0

    def __post_init__(self) -> None:
        if self.pi_power < 0:
            raise ValueError(f"pi_power must be non-negative, got {self.pi_power}")
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return ExactScalar(self.value + other.value, self.pi_power)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.value, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, ExactScalar):
            return ExactScalar(self.value * other.value, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.value * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.value) * math.pi**self.pi_power

    def __str__(self) -> str:
        if self.pi_power == 0:
            return str(self.value)
        suffix = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
        return f"{self.value}*{suffix}"


def half_angle_integral(p: int, q: int) -> ExactScalar:
    """Exact integral of sin^p(t) cos^q(t) over [0, pi/2].

    Equals (p-1)!! (q-1)!! / (p+q)!! times pi/2 when p and q are both even,
    and the bare double-factorial ratio otherwise (half the Beta function
    B((p+1)/2, (q+1)/2)).
    """
    if p < 0 or q < 0:
        raise ValueError("half_angle_integral needs non-negative exponents")
    ratio = Fraction(
        double_factorial(p - 1) * double_factorial(q - 1), double_factorial(p + q)
    )
    if p % 2 == 0 and q % 2 == 0:
        return ExactScalar(ratio / 2, 1)
    return ExactScalar(ratio, 0)


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


GR_ZERO = GaussianRational(Fraction(0))
GR_ONE = GaussianRational(Fraction(1))
