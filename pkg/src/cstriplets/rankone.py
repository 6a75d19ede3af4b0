"""Complete worked rank-one triplets: orthonormal bases, ladder-operator
matrices, Wigner functions via the Bargmann pairing, and the Bergman-measure
inner product as an independent cross-check of the kernel route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import GaussianRational, binomial, factorial, rising_product
from .polynomial import (
    BargmannPolynomial,
    PolyDiffOperator,
    mi_degree,
)

_VAR = (1, 1)
_SHAPE = (1, 1)


@dataclass(frozen=True)
class Su2Irrep:
    two_j: int

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise ValueError("two_j must be non-negative")

    @property
    def dimension(self) -> int:
        return self.two_j + 1

    def k_squared(self, nu: int) -> Fraction:
        if nu < 0:
            raise ValueError("nu must be non-negative")
        if nu > self.two_j:
            return Fraction(0)
        return Fraction(factorial(self.two_j), factorial(self.two_j - nu))


@dataclass(frozen=True)
class Su11Irrep:
    lam: Fraction | int
    cutoff: int

    def __post_init__(self) -> None:
        if Fraction(self.lam) <= 0:
            raise ValueError("lowest weight lambda must be positive")
        if self.cutoff < 0:
            raise ValueError("cutoff must be non-negative")

    def k_squared(self, nu: int) -> Fraction:
        if nu < 0:
            raise ValueError("nu must be non-negative")
        return rising_product(Fraction(self.lam), nu)


# --- Lie algebra realizations -------------------------------------------------------


def su2_operator(two_j: int, generator: str) -> PolyDiffOperator:
    """Differential-operator realization on coherent-state wave functions:
    J+ = d/dz, J0 = j - z d/dz, J- = 2j z - z^2 d/dz."""
    j = Fraction(two_j, 2)
    one = BargmannPolynomial.one(_SHAPE)
    z = BargmannPolynomial.variable(_SHAPE)
    if generator == "J+":
        return PolyDiffOperator(_SHAPE, ((one, _VAR),))
    if generator == "J0":
        return PolyDiffOperator(_SHAPE, ((one.scale(j), None), (-z, _VAR)))
    if generator == "J-":
        return PolyDiffOperator(_SHAPE, ((z.scale(2 * j), None), (-(z * z), _VAR)))
    raise ValueError(f"unknown su(2) generator {generator!r}")


def su11_operator(lam, generator: str) -> PolyDiffOperator:
    """J+ = lambda z + z^2 d/dz, J0 = lambda/2 + z d/dz, J- = d/dz."""
    lam = Fraction(lam)
    one = BargmannPolynomial.one(_SHAPE)
    z = BargmannPolynomial.variable(_SHAPE)
    if generator == "J+":
        return PolyDiffOperator(_SHAPE, ((z.scale(lam), None), (z * z, _VAR)))
    if generator == "J0":
        return PolyDiffOperator(_SHAPE, ((one.scale(lam / 2), None), (z, _VAR)))
    if generator == "J-":
        return PolyDiffOperator(_SHAPE, ((one, _VAR),))
    raise ValueError(f"unknown su(1,1) generator {generator!r}")


def _algebra_matrix_squares(
    op: PolyDiffOperator, coeff_squared: list[Fraction]
) -> list[list[Fraction]]:
    """Signed squared matrix elements of op in the orthonormal basis whose
    n-th vector is sqrt(coeff_squared[n]) z^n.

    Entry (t, n) is sign(M) * M^2 as an exact rational, so square-root closed
    forms can be compared exactly.  Image components beyond the truncated
    basis are dropped (the caller's documented truncation artifact).
    """
    dim = len(coeff_squared)
    squares = [[Fraction(0)] * dim for _ in range(dim)]
    for n in range(dim):
        image = op.apply(
            BargmannPolynomial.monomial(_SHAPE, {_VAR: n} if n else {})
        )
        for m, c in image.terms.items():
            t = mi_degree(m)
            if t >= dim:
                continue
            if not c.is_real:
                raise ValueError("unexpected complex matrix element")
            a = c.re
            squares[t][n] = (1 if a > 0 else -1) * a * a * coeff_squared[n] / coeff_squared[t]
    return squares


def _squares_to_matrix(squares: list[list[Fraction]]) -> np.ndarray:
    dim = len(squares)
    out = np.zeros((dim, dim))
    for t in range(dim):
        for n in range(dim):
            s = squares[t][n]
            out[t, n] = math.copysign(math.sqrt(abs(float(s))), float(s)) if s else 0.0
    return out


def su2_algebra_matrix_squares(two_j: int, generator: str) -> list[list[Fraction]]:
    """Exact signed squares of the generator matrix, basis ordered by
    m = j, j-1, ..., -j (monomial degree nu = j - m ascending)."""
    c2 = [Fraction(binomial(two_j, nu)) for nu in range(two_j + 1)]
    return _algebra_matrix_squares(su2_operator(two_j, generator), c2)


def su2_algebra_matrix(two_j: int, generator: str) -> np.ndarray:
    return _squares_to_matrix(su2_algebra_matrix_squares(two_j, generator))


def su11_algebra_matrix_squares(lam, cutoff: int, generator: str) -> list[list[Fraction]]:
    """Exact signed squares on the truncated basis nu = 0..cutoff.

    The J+ column at nu = cutoff is incomplete: its image leaves the
    truncated space and is dropped, so checks must exclude that boundary.
    """
    lam = Fraction(lam)
    c2 = [rising_product(lam, nu) / factorial(nu) for nu in range(cutoff + 1)]
    return _algebra_matrix_squares(su11_operator(lam, generator), c2)


def su11_algebra_matrix(lam, cutoff: int, generator: str) -> np.ndarray:
    return _squares_to_matrix(su11_algebra_matrix_squares(lam, cutoff, generator))


# --- Wigner functions ---------------------------------------------------------------


def _check_half_int(two_j: int, value, name: str) -> int:
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise ValueError(f"{name} must be a half-integer, got {value}")
    two_v = int(doubled)
    if (two_v - two_j) % 2 != 0:
        raise ValueError(f"{name}={value} incompatible with 2j={two_j}")
    if abs(two_v) > two_j:
        raise ValueError(f"|{name}|={value} exceeds j={Fraction(two_j, 2)}")
    return two_v


def su2_wigner_d(two_j: int, m, n, beta: float) -> float:
    """Wigner d^j_{mn}(beta) through the Bargmann pairing route.

    The pairing of phi_{j-m} with the transformed phi_{j-n} is carried out
    symbolically in c = cos(beta/2), s = sin(beta/2); floats enter only in
    the final evaluation, which kills cancellation near beta = 0 and pi.
    """
    two_m = _check_half_int(two_j, m, "m")
    two_n = _check_half_int(two_j, n, "n")
    jm = (two_j - two_m) // 2   # bra monomial degree
    jn = (two_j - two_n) // 2   # ket monomial degree
    jpn = (two_j + two_n) // 2
    # [Gamma(g) phi_{j-n}](z) = (c + s z)^{j+n} (-s + c z)^{j-n} / sqrt((j-n)!)
    # as a z-polynomial with (c, s)-polynomial coefficients; extract z^{j-m}.
    cs_poly: dict[tuple[int, int], Fraction] = {}
    for b in range(jn + 1):
        a = jm - b
        coeff = Fraction(binomial(jpn, a) * binomial(jn, b))
        if coeff == 0:
            continue
        coeff *= (-1) ** (jn - b)
        key = (jpn - a + b, a + jn - b)  # (c power, s power)
        cs_poly[key] = cs_poly.get(key, Fraction(0)) + coeff
    # Pairing with phi_{j-m} contributes (j-m)! and the basis normalizations;
    # the squared prefactor stays rational until the final square root.
    prefactor_sq = Fraction(
        factorial(jpn + jn - jm) * factorial(jm), factorial(jpn) * factorial(jn)
    )
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    value = sum(
        float(coeff) * c**pc * s**ps for (pc, ps), coeff in cs_poly.items()
    )
    return math.sqrt(float(prefactor_sq)) * value


def su2_dmatrix(two_j: int, beta: float) -> np.ndarray:
    """Full d^j(beta), rows and columns ordered m = j, j-1, ..., -j."""
    dim = two_j + 1
    out = np.zeros((dim, dim))
    for r in range(dim):
        for c in range(dim):
            m = Fraction(two_j - 2 * r, 2)
            n = Fraction(two_j - 2 * c, 2)
            out[r, c] = su2_wigner_d(two_j, m, n, beta)
    return out


def su11_wigner(lam: int, mu: int, nu: int, beta: float) -> float:
    """Discrete-series matrix element <lambda mu|T(g)|lambda nu> for the
    boost g = ((c, s), (s, c)), c = cosh(beta/2), s = sinh(beta/2).

    Finite single sum; terms whose factorial argument goes negative are
    skipped (the reciprocal factorial vanishes there).
    """
    if lam < 1 or mu < 0 or nu < 0:
        raise ValueError("need lambda >= 1 and mu, nu >= 0")
    c, s = math.cosh(beta / 2), math.sinh(beta / 2)
    prefactor_sq = Fraction(
        factorial(mu) * factorial(nu),
        factorial(lam + mu - 1) * factorial(lam + nu - 1),
    )
    total = 0.0
    for n in range(mu + 1):
        if nu - mu + n < 0:
            continue
        ratio = Fraction(
            factorial(lam + nu + n - 1),
            factorial(nu - mu + n) * factorial(mu - n) * factorial(n),
        )
        total += (
            (-1) ** n
            * float(ratio)
            * c ** (mu - nu - lam - 2 * n)
            * s ** (nu - mu + 2 * n)
        )
    return math.sqrt(float(prefactor_sq)) * total


# --- Bergman-measure inner product (independent of the kernel route) ----------------


def su2_measure_inner_product(
    two_j: int, bra: BargmannPolynomial, ket: BargmannPolynomial
) -> GaussianRational:
    """Inner product of coherent-state wave functions against the Bergman
    measure (2j+1)/pi (1+|z|^2)^{-2j-2} d^2 z, evaluated exactly through the
    monomial moments nu! (2j - nu)! / (2j)!.

    Degrees above 2j fall outside the irrep (the integral diverges there).
    """
    if bra.degree() > two_j or ket.degree() > two_j:
        raise ValueError(f"degree exceeds 2j = {two_j}; integral diverges")
    total = GaussianRational(Fraction(0))
    for m, b in bra.terms.items():
        k = ket.terms.get(m)
        if k is None:
            continue
        nu = mi_degree(m)
        moment = Fraction(
            factorial(nu) * factorial(two_j - nu), factorial(two_j)
        )
        total = total + b.conjugate() * k * moment
    return total
