"""The two SO(3)-based constructions: the rotor group [R^6]SO(3) with its
delta-function kernel and D2 selection rules, and the SU(3) > SO(3) Elliott
basis with exact overlap matrices S^L and their K-matrix orthonormalization.

The S^L entries are computed fully analytically: the alpha and gamma Euler
integrals are exact Fourier coefficients, the beta integral routes through
exact half-angle Beta integrals.  Genuine multiplicity blocks carry square
roots of factorial ratios; those are kept exact via the congruence
S^L = diag(sqrt(rho)) . M . diag(sqrt(rho)) with M rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import (
    GaussianRational,
    binomial,
    double_factorial,
    factorial,
    half_angle_integral,
)
from .groups import iwasawa_su3
from .kernels import PositivityError, psd_factor

# --- small exact carriers -----------------------------------------------------------

_SMALL_PRIMES: list[int] = []


def _primes_up_to(n: int) -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES and _SMALL_PRIMES[-1] >= n:
        return _SMALL_PRIMES
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    _SMALL_PRIMES = [int(p) for p in np.nonzero(sieve)[0]]
    return _SMALL_PRIMES


def _extract_square(f: Fraction) -> tuple[Fraction, Fraction]:
    """f = square * squarefree-ish remainder; factors found by trial division
    over small primes (the radicands here are products of factorials, so all
    prime factors are small)."""
    if f < 0:
        raise ValueError("radicand must be non-negative")
    if f == 0:
        return Fraction(0), Fraction(1)
    root = Fraction(1)
    num, den = f.numerator, f.denominator
    for p in _primes_up_to(1000):
        if p * p > max(num, den):
            break
        for target in ("num", "den"):
            val = num if target == "num" else den
            count = 0
            while val % p == 0:
                val //= p
                count += 1
            factor = Fraction(p) ** (count // 2)
            if target == "num":
                num = val * (p ** (count % 2))
                root *= factor
            else:
                den = val * (p ** (count % 2))
                root /= factor
    return root, Fraction(num, den)


@dataclass(frozen=True)
class RadicalScalar:
    """coeff * pi^pi_power * sqrt(radicand), all parts exact rationals.

    Radicands are normalized by extracting perfect-square factors, so values
    compare exactly and rational entries surface with radicand 1.
    """

    coeff: Fraction
    pi_power: int = 0
    radicand: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        coeff, radicand = Fraction(self.coeff), Fraction(self.radicand)
        if radicand < 0:
            raise ValueError("radicand must be non-negative")
        if coeff == 0 or radicand == 0:
            coeff, radicand = Fraction(0), Fraction(1)
        elif radicand != 1:
            root, rest = _extract_square(radicand)
            coeff, radicand = coeff * root, rest
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", radicand)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def is_rational_pi_multiple(self) -> bool:
        return self.radicand == 1

    def __mul__(self, other):
        if isinstance(other, RadicalScalar):
            return RadicalScalar(
                self.coeff * other.coeff,
                self.pi_power + other.pi_power,
                self.radicand * other.radicand,
            )
        if isinstance(other, (int, Fraction)):
            return RadicalScalar(self.coeff * other, self.pi_power, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return RadicalScalar(-self.coeff, self.pi_power, self.radicand)

    def __float__(self) -> float:
        return (
            float(self.coeff)
            * math.pi**self.pi_power
            * math.sqrt(float(self.radicand))
        )

    def to_json_obj(self) -> dict:
        return {
            "coeff": str(self.coeff),
            "pi_power": self.pi_power,
            "radicand": str(self.radicand),
        }

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.pi_power:
            parts.append("pi" if self.pi_power == 1 else f"pi^{self.pi_power}")
        if self.radicand != 1:
            parts.append(f"sqrt({self.radicand})")
        return "*".join(parts)


# --- rotor group [R^6]SO(3) ---------------------------------------------------------


@dataclass(frozen=True)
class D2Character:
    """One-dimensional D2 irrep: eps2 = eps(omega_2), eps3 = eps(omega_3),
    with eps(omega_1) = 1 and eps(omega_4) = eps2 * eps3."""

    eps2: int
    eps3: int

    def __post_init__(self) -> None:
        if self.eps2 not in (-1, 1) or self.eps3 not in (-1, 1):
            raise ValueError("D2 character signs must be +-1")

    @property
    def eps4(self) -> int:
        return self.eps2 * self.eps3


ALL_D2_CHARACTERS = tuple(
    D2Character(e2, e3) for e2 in (1, -1) for e3 in (1, -1)
)


@dataclass(frozen=True)
class RotorLabel:
    K: int
    L: int
    M: int

    def __post_init__(self) -> None:
        if self.L < 0 or not (0 <= self.K <= self.L) or abs(self.M) > self.L:
            raise ValueError(f"invalid rotor label K={self.K} L={self.L} M={self.M}")


def rotor_label_allowed(K: int, L: int, chi: D2Character) -> bool:
    """Selection rules: K parity fixed by eps3; for K = 0, L parity by eps2."""
    if (-1) ** K != chi.eps3:
        return False
    if K == 0 and (-1) ** L != chi.eps2:
        return False
    return True


def rotor_wavefunction(label: RotorLabel, chi: D2Character) -> tuple[Fraction, Fraction]:
    """Coefficients of the coherent-state wave function on the orthonormal
    pair (phi_{K L M}, phi_{-K, L M}) of normalized D-functions.

    For K = 0 the two D-functions coincide and the combined coefficient is
    returned in the first slot.  States killed by the selection rules give
    the zero pair (vanishing is a value, not an error).
    """
    q = Fraction(1 + chi.eps3 * (-1) ** label.K, 4)
    if label.K == 0:
        return q * (1 + chi.eps2 * (-1) ** label.L), Fraction(0)
    return q, q * chi.eps2 * (-1) ** (label.L + label.K)


def rotor_norms(chi: D2Character, l_max: int) -> dict[tuple[int, int], Fraction]:
    """Squared norms (1 + delta_{K0}) / 2 of the allowed |KLM> states."""
    if l_max < 0:
        raise ValueError("l_max must be >= 0")
    table: dict[tuple[int, int], Fraction] = {}
    for L in range(l_max + 1):
        for K in range(L + 1):
            if rotor_label_allowed(K, L, chi):
                table[(K, L)] = Fraction(1 + (1 if K == 0 else 0), 2)
    return table


def _sqrt_exact(f: Fraction) -> Fraction:
    root, rest = _extract_square(f)
    if rest != 1:
        raise ValueError(f"{f} is not a perfect rational square")
    return root


def _rotor_vectors(label: RotorLabel, chi: D2Character):
    """(psi, Psi) as maps signed-K -> coefficient, with the common irrational
    scale carried as an exact squared rational."""
    delta = 1 if label.K == 0 else 0
    psi = {label.K: Fraction(1)}
    psi_scale_sq = Fraction(2, 1 + delta)
    c_plus, c_minus = rotor_wavefunction(label, chi)
    big: dict[int, Fraction] = {}
    if c_plus:
        big[label.K] = c_plus
    if c_minus:
        big[-label.K] = big.get(-label.K, Fraction(0)) + c_minus
    # Phi = sum coeff * phi; Psi rescales Phi to unit norm: Psi = Phi / sqrt(norm)
    # with norm = (1 + delta_K0)/2 carried squared.
    big_scale_sq = Fraction(2, 1 + delta)
    return (psi, psi_scale_sq), (big, big_scale_sq)


def rotor_dual_pairing(
    label1: RotorLabel, label2: RotorLabel, chi: D2Character
) -> Fraction:
    """Exact integral of psi*_{label1} Psi_{label2} over SO(3), as coefficient
    algebra on the orthonormal D-function basis."""
    if (label1.L, label1.M) != (label2.L, label2.M):
        return Fraction(0)
    (psi, s1), (big, s2) = _rotor_vectors(label2, chi)
    (psi1, s1a), _ = _rotor_vectors(label1, chi)
    overlap = sum(
        (psi1.get(k, Fraction(0)) * big.get(k, Fraction(0)) for k in big),
        Fraction(0),
    )
    if overlap == 0:
        return Fraction(0)
    return _sqrt_exact(s1a * s2) * overlap


def rotor_coherent_pairing(
    label1: RotorLabel, label2: RotorLabel, chi: D2Character
) -> Fraction:
    """Exact integral of Psi*_{label1} Psi_{label2}; with the delta-kernel
    normalization the coherent-state wave functions are orthonormal on their
    own as well."""
    if (label1.L, label1.M) != (label2.L, label2.M):
        return Fraction(0)
    _, (big1, t1) = _rotor_vectors(label1, chi)
    _, (big2, t2) = _rotor_vectors(label2, chi)
    overlap = sum(
        (big1.get(k, Fraction(0)) * big2.get(k, Fraction(0)) for k in big2),
        Fraction(0),
    )
    if overlap == 0:
        return Fraction(0)
    return _sqrt_exact(t1 * t2) * overlap


# --- exact SO(3) Wigner functions in half-angle variables ---------------------------


@dataclass(frozen=True)
class HalfAngleD:
    """d^L_{K'K}(beta) = sqrt(radicand) * sum_t terms[t] c^t[0] s^t[1] with
    c = cos(beta/2), s = sin(beta/2); the polynomial part has integer
    coefficients of total degree 2L."""

    L: int
    Kp: int
    K: int
    radicand: Fraction
    terms: dict[tuple[int, int], Fraction]

    def evaluate(self, beta: float) -> float:
        c, s = math.cos(beta / 2), math.sin(beta / 2)
        value = sum(float(v) * c**pc * s**ps for (pc, ps), v in self.terms.items())
        return math.sqrt(float(self.radicand)) * value


def _d_polynomial_part(L: int, Kp: int, K: int) -> dict[tuple[int, int], Fraction]:
    """Integer-coefficient polynomial C with d^L_{K'K} = sqrt(rho_K'/rho_K) C."""
    terms: dict[tuple[int, int], Fraction] = {}
    for b in range(L - K + 1):
        c1 = binomial(L + K, L - Kp - b)
        c2 = binomial(L - K, b)
        if c1 == 0 or c2 == 0:
            continue
        coeff = Fraction(c1 * c2 * (-1) ** (L - K - b))
        key = (K + Kp + 2 * b, 2 * L - K - Kp - 2 * b)
        assert key[0] >= 0 and key[1] >= 0
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return {k: v for k, v in terms.items() if v}


def _rho(L: int, K: int) -> int:
    return factorial(L + K) * factorial(L - K)


def wigner_big_d_coefficients(L: int, Kp: int, K: int) -> HalfAngleD:
    """Exact reduced Wigner function d^L_{K'K} in half-angle variables."""
    if abs(Kp) > L or abs(K) > L:
        raise ValueError(f"|K'| and |K| must be <= L = {L}")
    radicand = Fraction(_rho(L, Kp), _rho(L, K))
    return HalfAngleD(L, Kp, K, radicand, _d_polynomial_part(L, Kp, K))


# --- SU(3) > SO(3): exact S^L entries ------------------------------------------------


def _fourier_integral(k: int, a: int, b: int) -> tuple[GaussianRational, int]:
    """Exact (value/pi, pi_power=1) of the integral of e^{ik t} cos^a t sin^b t
    over [0, 2pi]; zero is returned with pi_power 1 as well."""
    if (a + b - k) % 2 != 0:
        return GaussianRational(Fraction(0)), 1
    target = (a + b - k) // 2
    acc = 0
    for r in range(a + 1):
        s = target - r
        if 0 <= s <= b:
            acc += binomial(a, r) * binomial(b, s) * (-1) ** (b - s)
    scale = Fraction(2, 2 ** (a + b))
    # (1/(2i))^b contributes (-i)^b / 2^b, cycling with b mod 4.
    cycle = b % 4
    re, im = {0: (1, 0), 1: (0, -1), 2: (-1, 0), 3: (0, 1)}[cycle]
    value = GaussianRational(scale * acc * re, scale * acc * im)
    return value, 1


def _beta_integral(
    c_poly: dict[tuple[int, int], Fraction], cos_power: int
) -> tuple[Fraction, int]:
    """Exact integral over beta in [0, pi] of C(c, s) cos^t(beta) sin(beta)
    d(beta) in half-angle variables; returns (rational, pi_power)."""
    value_by_power: dict[int, Fraction] = {}
    for (pc, ps), coeff in c_poly.items():
        for r in range(cos_power + 1):
            factor = coeff * binomial(cos_power, r) * (-1) ** (cos_power - r)
            if factor == 0:
                continue
            term = half_angle_integral(ps + 2 * (cos_power - r) + 1, pc + 2 * r + 1)
            total = value_by_power.get(term.pi_power, Fraction(0))
            value_by_power[term.pi_power] = total + 4 * factor * term.value
    value_by_power = {p: v for p, v in value_by_power.items() if v}
    if not value_by_power:
        return Fraction(0), 0
    if len(value_by_power) > 1:
        raise ArithmeticError(
            f"mixed pi powers {sorted(value_by_power)} in a beta integral"
        )
    power, value = next(iter(value_by_power.items()))
    return value, power


def _su3_entry_reduced(lam: int, mu: int, L: int, Kp: int, K: int) -> tuple[Fraction, int]:
    """The S^L entry with the Wigner normalization sqrt(rho_K'/rho_K) divided
    out: a pure rational times pi^pi_power.  Aborts on mixed pi powers."""
    c_poly = _d_polynomial_part(L, Kp, K)
    by_power: dict[int, Fraction] = {}
    for a in range(mu + 1):
        weight = Fraction(binomial(mu, a) * (-1) ** (mu - a))
        f_alpha, p1 = _fourier_integral(Kp, a, mu - a)
        f_gamma, p2 = _fourier_integral(K, a, mu - a)
        angular = f_alpha * f_gamma
        if angular.is_zero:
            continue
        if not angular.is_real:
            raise ArithmeticError("alpha/gamma integrals produced a complex product")
        radial, p3 = _beta_integral(c_poly, lam + mu - a)
        if radial == 0:
            continue
        power = p1 + p2 + p3
        by_power[power] = by_power.get(power, Fraction(0)) + weight * angular.re * radial
    by_power = {p: v for p, v in by_power.items() if v}
    if not by_power:
        return Fraction(0), 2
    if len(by_power) > 1:
        raise ArithmeticError(
            f"mixed pi powers {sorted(by_power)} in S^L entry "
            f"(lam={lam}, mu={mu}, L={L}, K'={Kp}, K={K})"
        )
    power, value = next(iter(by_power.items()))
    return value, power


def su3_kernel_exact(lam: int, mu: int, L: int, Kp: int, K: int) -> RadicalScalar:
    """Exact Elliott overlap S^L_{K'K} for the SU(3) irrep (lam, mu).

    Fully analytic: binomial expansion of the mu power of the kernel, exact
    Fourier integrals over the outer Euler angles, exact half-angle Beta
    integrals over beta.  The result is rational * pi^2 * sqrt(factorial
    ratio); the radical is 1 on every multiplicity-free sector.
    """
    if lam < 0 or mu < 0:
        raise ValueError("highest weight labels must be non-negative")
    if abs(Kp) > L or abs(K) > L:
        raise ValueError(f"|K'|, |K| must be <= L = {L}")
    value, power = _su3_entry_reduced(lam, mu, L, Kp, K)
    return RadicalScalar(value, power, Fraction(_rho(L, Kp), _rho(L, K)))


def su3_allowed_k(lam: int, mu: int, L: int) -> list[int]:
    """Non-negative K with the parity of mu, K <= L, dropping K = 0 when
    (-1)^(lam+L) = -1 (those states vanish identically)."""
    allowed = []
    for K in range(L + 1):
        if (-1) ** K != (-1) ** mu:
            continue
        if K == 0 and (-1) ** (lam + L) == -1:
            continue
        allowed.append(K)
    return allowed


@dataclass(frozen=True)
class SLMatrix:
    """Exact S^L block over the allowed K labels plus its float K-matrix.

    The exact content is the congruence S = D M D with D = diag(sqrt(rho_K)):
    ``m_over_pi2`` holds the rational matrix M / pi^2 and ``rho`` the integer
    scales, so every entry is reconstructed exactly as a RadicalScalar.
    ``null_K`` lists candidate labels whose states are annihilated outright
    (their rows vanish exactly); they are excluded from ``allowed_K``.
    """

    lam: int
    mu: int
    L: int
    allowed_K: tuple[int, ...]
    m_over_pi2: tuple[tuple[Fraction, ...], ...]
    rho: tuple[int, ...]
    s_float: np.ndarray
    k_matrix: np.ndarray
    eigenvalues: np.ndarray
    rank: int
    null_K: tuple[int, ...] = ()

    def entry(self, Kp: int, K: int) -> RadicalScalar:
        i, j = self.allowed_K.index(Kp), self.allowed_K.index(K)
        return RadicalScalar(
            self.m_over_pi2[i][j], 2, Fraction(self.rho[i] * self.rho[j])
        )

    @property
    def kbar(self) -> np.ndarray:
        """(K^dagger)^-1 on the positive-rank part; defined for full rank."""
        if self.rank < len(self.allowed_K):
            raise ValueError("kbar undefined on a rank-deficient block")
        return np.linalg.inv(self.k_matrix.conj().T)

    def to_json_obj(self) -> dict:
        size = len(self.allowed_K)
        entries = [
            [self.entry(self.allowed_K[i], self.allowed_K[j]).to_json_obj()
             for j in range(size)]
            for i in range(size)
        ]
        for row in entries:
            for cell in row:
                cell.pop("pi_power", None)
        return {
            "lam": self.lam,
            "mu": self.mu,
            "L": self.L,
            "allowed_K": list(self.allowed_K),
            "S_over_pi2": entries,
            "K_matrix": [[float(v.real) for v in row] for row in np.atleast_2d(self.k_matrix)]
            if size
            else [],
            "rank": self.rank,
        }


def su3_k_matrix(lam: int, mu: int, L: int, rel_tol: float = 1e-12) -> SLMatrix:
    """Assemble the exact S^L block on the allowed K set and factor it.

    Candidate labels whose rows vanish exactly are dropped into null_K (the
    maximal linearly-independent restriction); a block whose states are all
    null is a valid rank-0 outcome, not an error.  The multiplicity ordering
    follows descending eigenvalue of S^L.
    """
    candidates = su3_allowed_k(lam, mu, L)
    reduced = {}
    power_seen: set[int] = set()
    for Kp in candidates:
        for K in candidates:
            value, power = _su3_entry_reduced(lam, mu, L, Kp, K)
            if value:
                power_seen.add(power)
            reduced[(Kp, K)] = value
    if len(power_seen) > 1:
        raise ArithmeticError(f"mixed pi powers {sorted(power_seen)} across S^L block")
    null_k = tuple(
        K for K in candidates
        if all(reduced[(Kp, K)] == 0 for Kp in candidates)
    )
    allowed = tuple(K for K in candidates if K not in null_k)
    size = len(allowed)
    if size == 0:
        return SLMatrix(lam, mu, L, (), (), (), np.zeros((0, 0)),
                        np.zeros((0, 0)), np.zeros(0), 0, null_k)
    rho = tuple(_rho(L, K) for K in allowed)
    # M = D^-1 S D^-1 must come out exactly symmetric rational: the reduced
    # entry is sqrt(rho_i/rho_j) free, so M_ij = reduced_ij / rho_j.
    m_rows = []
    for Kp in allowed:
        row = []
        for j, K in enumerate(allowed):
            row.append(reduced[(Kp, K)] / rho[j])
        m_rows.append(tuple(row))
    for i in range(size):
        for j in range(size):
            if m_rows[i][j] != m_rows[j][i]:
                raise ArithmeticError("S^L congruence matrix not symmetric")
    pi2 = math.pi**2
    d_half = np.diag([math.sqrt(r) for r in rho])
    m_float = np.array([[float(v) * pi2 for v in row] for row in m_rows])
    s_float = d_half @ m_float @ d_half
    k, eigvals, _ = psd_factor(s_float, rel_tol)
    rank = int(np.sum(eigvals > 0))
    return SLMatrix(
        lam, mu, L, allowed, tuple(m_rows), rho, s_float, k, eigvals, rank, null_k
    )


def su3_k_zero_mu_closed_form(lam: int, L: int) -> RadicalScalar:
    """|K(L)|^2 = 4 pi^2 lam! / ((lam-L)!! (lam+L+1)!!) [1 + (-1)^(lam+L)]
    for the multiplicity-free (lam, 0) irreps."""
    if L > lam:
        return RadicalScalar(Fraction(0), 2)
    parity = 1 + (-1) ** (lam + L)
    value = Fraction(4 * factorial(lam) * parity)
    value /= double_factorial(lam - L) * double_factorial(lam + L + 1)
    return RadicalScalar(value, 2)


# --- SU(3) group action through the Iwasawa factorization ---------------------------


def su3_action(g, omega, lam: int, mu: int):
    """Cocycle data of Gamma(g) at the SO(3) point omega:
    multiplier = z11(omega g)^(lam+mu) z22(omega g)^mu and the moved point
    omega(omega g).  The diagonal entries are branch-dependent; their squares
    and the moved point modulo the D2 sign flips are the invariant content.
    """
    product = np.asarray(omega, dtype=complex) @ np.asarray(g, dtype=complex)
    factors = iwasawa_su3(product, validate=False)
    z11, z22 = factors.Z[0, 0], factors.Z[1, 1]
    return z11 ** (lam + mu) * z22**mu, factors.omega
