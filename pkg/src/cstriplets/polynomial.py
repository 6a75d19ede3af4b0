"""Multivariate polynomial algebra over Gaussian rationals with the Bargmann pairing.

Wave functions live in variables z[i,v] indexed by a (p, q) shape; scalar
families use shape (1, 1).  The pairing of two polynomials is the exact
evaluation of psi*(d/dx) phi(x) at x = 0, under which the normalized
monomials z^n / sqrt(n!) are orthonormal.  Square roots are never stored:
bases are kept as (monomial, squared norm) pairs throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import GR_ONE, GR_ZERO, GaussianRational, factorial

# A variable index (row, col), 1-based, valid for shape (p, q) when
# 1 <= row <= p and 1 <= col <= q.
VariableIndex = tuple[int, int]

# A multi-index is a canonical (sorted, zero-free) tuple of
# ((row, col), exponent) pairs.
MultiIndex = tuple[tuple[VariableIndex, int], ...]

MI_ONE: MultiIndex = ()


def mi_make(exponents: dict[VariableIndex, int]) -> MultiIndex:
    items = [(v, e) for v, e in exponents.items() if e != 0]
    if any(e < 0 for _, e in items):
        raise ValueError(f"negative exponent in {exponents}")
    return tuple(sorted(items))


def mi_mul(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def mi_degree(m: MultiIndex) -> int:
    return sum(e for _, e in m)


def mi_factorial(m: MultiIndex) -> int:
    """Product of exponent factorials; the Bargmann norm squared of z^m."""
    result = 1
    for _, e in m:
        result *= factorial(e)
    return result


def _check_shape(shape: tuple[int, int], m: MultiIndex) -> None:
    p, q = shape
    for (i, v), _ in m:
        if not (1 <= i <= p and 1 <= v <= q):
            raise ValueError(f"variable ({i},{v}) outside shape {shape}")


class BargmannPolynomial:
    """Polynomial in the variables z[i,v] with GaussianRational coefficients.

    Instances are immutable by convention; every operation returns a fresh
    polynomial.  Zero coefficients are never stored.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: tuple[int, int], terms: dict[MultiIndex, GaussianRational]):
        self.shape = shape
        clean: dict[MultiIndex, GaussianRational] = {}
        for m, c in terms.items():
            c = GaussianRational.of(c)
            if not c.is_zero:
                _check_shape(shape, m)
                clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls, shape: tuple[int, int] = (1, 1)) -> "BargmannPolynomial":
        return cls(shape, {})

    @classmethod
    def one(cls, shape: tuple[int, int] = (1, 1)) -> "BargmannPolynomial":
        return cls(shape, {MI_ONE: GR_ONE})

    @classmethod
    def variable(cls, shape: tuple[int, int], row: int = 1, col: int = 1) -> "BargmannPolynomial":
        return cls(shape, {mi_make({(row, col): 1}): GR_ONE})

    @classmethod
    def monomial(
        cls,
        shape: tuple[int, int],
        exponents: dict[VariableIndex, int],
        coefficient=GR_ONE,
    ) -> "BargmannPolynomial":
        return cls(shape, {mi_make(exponents): GaussianRational.of(coefficient)})

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(mi_degree(m) for m in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: MultiIndex) -> GaussianRational:
        return self.terms.get(m, GR_ZERO)

    def __add__(self, other: "BargmannPolynomial") -> "BargmannPolynomial":
        self._require_same_shape(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, GR_ZERO) + c
        return BargmannPolynomial(self.shape, terms)

    def __sub__(self, other: "BargmannPolynomial") -> "BargmannPolynomial":
        return self + (-other)

    def __neg__(self) -> "BargmannPolynomial":
        return BargmannPolynomial(self.shape, {m: -c for m, c in self.terms.items()})

    def scale(self, scalar) -> "BargmannPolynomial":
        s = GaussianRational.of(scalar)
        return BargmannPolynomial(self.shape, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._require_same_shape(other)
        terms: dict[MultiIndex, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mi_mul(m1, m2)
                terms[m] = terms.get(m, GR_ZERO) + c1 * c2
        return BargmannPolynomial(self.shape, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BargmannPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BargmannPolynomial.one(self.shape)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self, var: VariableIndex) -> "BargmannPolynomial":
        terms: dict[MultiIndex, GaussianRational] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(var, 0)
            if e == 0:
                continue
            exps[var] = e - 1
            dm = mi_make(exps)
            terms[dm] = terms.get(dm, GR_ZERO) + c * e
        return BargmannPolynomial(self.shape, terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BargmannPolynomial)
            and self.shape == other.shape
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(
                f"z{i}{v}" + (f"^{e}" if e > 1 else "") for (i, v), e in m
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def _require_same_shape(self, other: "BargmannPolynomial") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    # --- canonical serialization -------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "shape": list(self.shape),
            "terms": [_term_json(m, c) for m, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BargmannPolynomial":
        shape = tuple(obj["shape"])
        terms = {}
        for entry in obj["terms"]:
            m, c = _term_from_json(entry)
            terms[m] = c
        return cls(shape, terms)


def _term_json(m: MultiIndex, c: GaussianRational) -> list:
    exps = [[i, v, e] for (i, v), e in m]
    coeff = [
        c.re.numerator,
        c.re.denominator,
        c.im.numerator,
        c.im.denominator,
    ]
    return [exps, coeff]


def _term_from_json(entry: list) -> tuple[MultiIndex, GaussianRational]:
    exps, coeff = entry
    m = mi_make({(i, v): e for i, v, e in exps})
    c = GaussianRational(
        Fraction(coeff[0], coeff[1]), Fraction(coeff[2], coeff[3])
    )
    return m, c


def bargmann_pair(bra: BargmannPolynomial, ket: BargmannPolynomial) -> GaussianRational:
    """Exact Bargmann inner product: sum over shared monomials of
    conj(bra_m) ket_m m!.

    Equals the Gaussian-measure integral of bra* ket, i.e. the evaluation
    of bra(d/dx) applied to ket at x = 0.
    """
    if bra.shape != ket.shape:
        raise ValueError(f"shape mismatch: {bra.shape} vs {ket.shape}")
    small, large = (bra.terms, ket.terms)
    if len(large) < len(small):
        small, large = large, small
    total = GR_ZERO
    for m in small:
        if m in large:
            total = total + bra.terms[m].conjugate() * ket.terms[m] * mi_factorial(m)
    return total


class BilinearKernelPolynomial:
    """Truncated expansion of an overlap kernel S(z, x) = sum S_mn z^m x*^n.

    The coefficient map is Hermitian (S_nm = conj(S_mn)) and every operation
    that consumes a polynomial checks its degree against ``degree_cutoff``:
    the expansions converge only on dense subspaces, so exceeding the cutoff
    is an error, never a silent truncation.
    """

    __slots__ = ("shape", "terms", "degree_cutoff")

    def __init__(
        self,
        shape: tuple[int, int],
        terms: dict[tuple[MultiIndex, MultiIndex], GaussianRational],
        degree_cutoff: int,
        check_hermitian: bool = True,
    ):
        if degree_cutoff < 0:
            raise ValueError("degree_cutoff must be >= 0")
        self.shape = shape
        self.degree_cutoff = degree_cutoff
        clean: dict[tuple[MultiIndex, MultiIndex], GaussianRational] = {}
        for (mz, mx), c in terms.items():
            c = GaussianRational.of(c)
            if c.is_zero:
                continue
            _check_shape(shape, mz)
            _check_shape(shape, mx)
            clean[(mz, mx)] = c
        self.terms = clean
        if check_hermitian:
            self._check_hermitian()

    def _check_hermitian(self) -> None:
        for (mz, mx), c in self.terms.items():
            partner = self.terms.get((mx, mz), GR_ZERO)
            if partner != c.conjugate():
                raise ValueError(
                    f"kernel not Hermitian at ({mz}, {mx}): {c} vs conj({partner})"
                )

    def coefficient(self, mz: MultiIndex, mx: MultiIndex) -> GaussianRational:
        return self.terms.get((mz, mx), GR_ZERO)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BilinearKernelPolynomial)
            and self.shape == other.shape
            and self.degree_cutoff == other.degree_cutoff
            and self.terms == other.terms
        )

    def to_json_obj(self) -> dict:
        entries = []
        for (mz, mx), c in sorted(self.terms.items()):
            entries.append(
                [
                    [[i, v, e] for (i, v), e in mz],
                    [[i, v, e] for (i, v), e in mx],
                    [c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator],
                ]
            )
        return {
            "shape": list(self.shape),
            "degree_cutoff": self.degree_cutoff,
            "terms": entries,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BilinearKernelPolynomial":
        terms = {}
        for z_exps, x_exps, coeff in obj["terms"]:
            mz = mi_make({(i, v): e for i, v, e in z_exps})
            mx = mi_make({(i, v): e for i, v, e in x_exps})
            terms[(mz, mx)] = GaussianRational(
                Fraction(coeff[0], coeff[1]), Fraction(coeff[2], coeff[3])
            )
        return cls(tuple(obj["shape"]), terms, obj["degree_cutoff"])


def _check_cutoff(kernel: BilinearKernelPolynomial, poly: BargmannPolynomial, side: str) -> None:
    if poly.degree() > kernel.degree_cutoff:
        raise ValueError(
            f"{side} degree {poly.degree()} exceeds kernel cutoff {kernel.degree_cutoff}"
        )


def pair_through_kernel(
    bra: BargmannPolynomial,
    kernel: BilinearKernelPolynomial,
    ket: BargmannPolynomial,
) -> GaussianRational:
    """Inner product <bra|S|ket> evaluated by two nested Bargmann pairings."""
    if bra.shape != kernel.shape or ket.shape != kernel.shape:
        raise ValueError("shape mismatch between kernel and arguments")
    _check_cutoff(kernel, bra, "bra")
    _check_cutoff(kernel, ket, "ket")
    total = GR_ZERO
    for (mz, mx), s in kernel.terms.items():
        b = bra.terms.get(mz)
        if b is None:
            continue
        k = ket.terms.get(mx)
        if k is None:
            continue
        total = total + b.conjugate() * s * k * (mi_factorial(mz) * mi_factorial(mx))
    return total


def apply_kernel(
    kernel: BilinearKernelPolynomial, ket: BargmannPolynomial
) -> BargmannPolynomial:
    """The dual coherent-state wave function S^ ket; exact coefficient map."""
    if ket.shape != kernel.shape:
        raise ValueError("shape mismatch between kernel and argument")
    _check_cutoff(kernel, ket, "ket")
    terms: dict[MultiIndex, GaussianRational] = {}
    for (mz, mx), s in kernel.terms.items():
        k = ket.terms.get(mx)
        if k is None:
            continue
        add = s * k * mi_factorial(mx)
        terms[mz] = terms.get(mz, GR_ZERO) + add
    return BargmannPolynomial(ket.shape, terms)


@dataclass(frozen=True)
class PolyDiffOperator:
    """First-order differential operator: sum of poly * d/dvar terms plus a
    polynomial multiplication part (var None)."""

    shape: tuple[int, int]
    terms: tuple[tuple[BargmannPolynomial, VariableIndex | None], ...] = field(
        default=()
    )

    def apply(self, f: BargmannPolynomial) -> BargmannPolynomial:
        if f.shape != self.shape:
            raise ValueError("operator/polynomial shape mismatch")
        result = BargmannPolynomial.zero(self.shape)
        for coeff_poly, var in self.terms:
            part = f if var is None else f.derivative(var)
            result = result + coeff_poly * part
        return result

    def __add__(self, other: "PolyDiffOperator") -> "PolyDiffOperator":
        if self.shape != other.shape:
            raise ValueError("operator shape mismatch")
        return PolyDiffOperator(self.shape, self.terms + other.terms)

    def scale(self, scalar) -> "PolyDiffOperator":
        return PolyDiffOperator(
            self.shape, tuple((p.scale(scalar), v) for p, v in self.terms)
        )


def differential_operator_apply(
    op: PolyDiffOperator, f: BargmannPolynomial
) -> BargmannPolynomial:
    """Exact image of f under a polynomial-coefficient first-order operator."""
    return op.apply(f)


def operator_commutator_apply(
    a: PolyDiffOperator, b: PolyDiffOperator, f: BargmannPolynomial
) -> BargmannPolynomial:
    """[a, b] f = a(b f) - b(a f)."""
    return a.apply(b.apply(f)) - b.apply(a.apply(f))
