"""Validated group elements of the supported real forms and the block Gauss,
Harish-Chandra and Iwasawa factorizations driving every coherent-state action.

All numerics here are complex double precision; exactness lives in the
kernel/normalization layer.  Factorizations fail loudly on the measure-zero
set where the pivot degenerates (|pivot| below 1e-12), because silently
near-singular output would poison the homomorphism checks downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import expm

MEMBERSHIP_TOL = 1e-10
PIVOT_TOL = 1e-12


class MembershipError(ValueError):
    """Matrix violates the defining relations of the claimed family."""


class ChartError(ValueError):
    """Point lies outside the dense chart where the factorization exists."""


class Family(str, Enum):
    SU2 = "SU2"
    SU11 = "SU11"
    SUN = "SUn"          # compact SU(p+q) with a (p, q) block split
    SUPQ = "SUpq"        # noncompact SU(p, q)
    SP = "Spn"           # compact Sp(n)
    SPR = "SpnR"         # noncompact Sp(n, R)
    SO2N = "SO2n"        # compact SO(2n)
    SOSTAR = "SOstar"    # noncompact SO*(2n)
    SOP2 = "SOp2"        # noncompact SO(p, 2)
    SOPPLUS2 = "SOpplus2"  # compact SO(p + 2)


# Families whose coherent-state chart is the upper-triangular block (z on the
# right of the diagonal); the rest of the matrix families use the lower chart.
_UPPER_CHART = {Family.SU2, Family.SUN, Family.SUPQ}
_LOWER_CHART = {Family.SU11, Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR}
_VECTOR_CHART = {Family.SOP2, Family.SOPPLUS2}


def _norm(m) -> float:
    return float(np.max(np.abs(np.atleast_2d(m)))) if np.size(m) else 0.0


def membership_residual(family: Family, m: np.ndarray, shape: tuple) -> float:
    """Maximum violation of the family's defining relations."""
    m = np.asarray(m, dtype=complex)
    n_expected = _matrix_size(family, shape)
    if m.shape != (n_expected, n_expected):
        raise ValueError(f"{family.value} with shape {shape} needs a "
                         f"{n_expected}x{n_expected} matrix, got {m.shape}")
    eye = np.eye(n_expected)
    res = []
    if family is Family.SU2:
        a, b = m[0, 0], m[0, 1]
        res += [_norm(m[1, 0] + np.conj(b)), _norm(m[1, 1] - np.conj(a))]
        res += [abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)]
    elif family is Family.SU11:
        a, b = m[0, 0], m[0, 1]
        res += [_norm(m[1, 0] - np.conj(b)), _norm(m[1, 1] - np.conj(a))]
        res += [abs(abs(a) ** 2 - abs(b) ** 2 - 1.0)]
    elif family is Family.SUN:
        res += [_norm(m.conj().T @ m - eye), abs(np.linalg.det(m) - 1.0)]
    elif family is Family.SUPQ:
        p, q = shape
        eta = np.diag([1.0] * p + [-1.0] * q)
        res += [_norm(m.conj().T @ eta @ m - eta), abs(np.linalg.det(m) - 1.0)]
    elif family in (Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR):
        (n,) = shape
        alpha, tr = m[:n, :n], m[:n, n:]
        bl, br = m[n:, :n], m[n:, n:]
        res += [_norm(br - np.conj(alpha))]
        if family is Family.SP:
            beta = -tr
            res += [_norm(bl - np.conj(beta))]
            res += [_norm(alpha @ alpha.conj().T + beta @ beta.conj().T - eye[:n, :n])]
            res += [_norm(alpha @ beta.T - beta @ alpha.T)]
        elif family is Family.SPR:
            beta = tr
            res += [_norm(bl - np.conj(beta))]
            res += [_norm(alpha @ alpha.conj().T - beta @ beta.conj().T - eye[:n, :n])]
            res += [_norm(alpha @ beta.T - beta @ alpha.T)]
        elif family is Family.SO2N:
            beta = tr
            res += [_norm(bl - np.conj(beta))]
            res += [_norm(alpha @ alpha.conj().T + beta @ beta.conj().T - eye[:n, :n])]
            res += [_norm(alpha @ beta.T + beta @ alpha.T)]
        else:  # SOSTAR
            beta = tr
            res += [_norm(bl + np.conj(beta))]
            res += [_norm(alpha @ alpha.conj().T - beta @ beta.conj().T - eye[:n, :n])]
            res += [_norm(alpha @ beta.T + beta @ alpha.T)]
    elif family in (Family.SOP2, Family.SOPPLUS2):
        (p,) = shape
        res += [_norm(m.imag)]
        j = np.eye(p + 2)
        if family is Family.SOP2:
            j[0, 0] = j[1, 1] = -1.0
        res += [_norm(m @ j @ m.T - j), abs(np.linalg.det(m) - 1.0)]
    else:
        raise ValueError(f"unknown family {family}")
    return max(res)


def _matrix_size(family: Family, shape: tuple) -> int:
    if family in (Family.SU2, Family.SU11):
        return 2
    if family in (Family.SUN, Family.SUPQ):
        p, q = shape
        return p + q
    if family in (Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR):
        (n,) = shape
        return 2 * n
    (p,) = shape
    return p + 2


def _default_shape(family: Family, m: np.ndarray) -> tuple:
    n = m.shape[0]
    if family in (Family.SU2, Family.SU11):
        return (1, 1)
    if family in (Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR):
        return (n // 2,)
    if family in (Family.SOP2, Family.SOPPLUS2):
        return (n - 2,)
    raise ValueError(f"{family.value} requires an explicit (p, q) shape")


@dataclass(frozen=True)
class GroupElement:
    """A matrix validated against the defining relations of its family."""

    family: Family
    matrix: np.ndarray
    shape: tuple

    @property
    def block_split(self) -> int:
        """Row/column count of the top-left block in the Gauss factorization."""
        if self.family in _UPPER_CHART:
            return self.shape[0] if self.family is not Family.SU2 else 1
        if self.family in _LOWER_CHART:
            return 1 if self.family is Family.SU11 else self.shape[0]
        return 2  # SO(p +- 2): leading SO(2) block


def group_element(
    family: Family,
    matrix,
    shape: tuple | None = None,
    tol: float = MEMBERSHIP_TOL,
) -> GroupElement:
    m = np.asarray(matrix, dtype=complex)
    if shape is None:
        shape = _default_shape(family, m)
    residual = membership_residual(family, m, shape)
    if residual > tol:
        raise MembershipError(
            f"matrix violates {family.value} relations by {residual:.3e} (tol {tol:.1e})"
        )
    return GroupElement(family, m, tuple(shape))


def identity_element(family: Family, shape: tuple) -> GroupElement:
    return group_element(family, np.eye(_matrix_size(family, shape)), shape)


# --- Gauss / block Gauss factorization --------------------------------------------


@dataclass(frozen=True)
class GaussFactors:
    """Triangular x diagonal x triangular factors of a matrix.

    Upper-first form (default): m = L(x) . diag . U(z) with L unipotent lower
    (parameter x) and U unipotent upper (parameter z).  The lower-first form
    swaps the triangle order: m = U(x) . diag . L(z).
    """

    x: np.ndarray
    diagonal: tuple[np.ndarray, np.ndarray]
    z: np.ndarray
    lower_first: bool = False
    prefactor_exponent: int = 0
    pivot_condition: float = 1.0

    def reassemble(self) -> np.ndarray:
        a, d = self.diagonal
        p, q = a.shape[0], d.shape[0]
        n = p + q
        diag = np.zeros((n, n), dtype=complex)
        diag[:p, :p], diag[p:, p:] = a, d
        tri_x = np.eye(n, dtype=complex)
        tri_z = np.eye(n, dtype=complex)
        if self.lower_first:
            tri_x[:p, p:] = self.x
            tri_z[p:, :p] = self.z
        else:
            tri_x[p:, :p] = self.x
            tri_z[:p, p:] = self.z
        return tri_x @ diag @ tri_z

    def residual(self, m) -> float:
        return _norm(self.reassemble() - np.asarray(m, dtype=complex))


def gauss_2x2(m, lower_first: bool = False) -> GaussFactors:
    """Gauss factorization of a 2x2 matrix.

    Upper-first: pivot a = m[0,0], z = b/a, x = c/a.  Lower-first: pivot
    d = m[1,1], x = b/d, z = c/d.  Raises ChartError on a vanishing pivot
    (the factorizable set covers only almost every matrix).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError("gauss_2x2 needs a 2x2 matrix")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    det = a * d - b * c
    if lower_first:
        if abs(d) <= PIVOT_TOL:
            raise ChartError(f"vanishing pivot d={d}")
        x, z = b / d, c / d
        diag = (np.array([[det / d]]), np.array([[d]]))
        return GaussFactors(np.array([[x]]), diag, np.array([[z]]), True)
    if abs(a) <= PIVOT_TOL:
        raise ChartError(f"vanishing pivot a={a}")
    x, z = c / a, b / a
    diag = (np.array([[a]]), np.array([[det / a]]))
    return GaussFactors(np.array([[x]]), diag, np.array([[z]]), False)


def gauss_block(m, p: int, q: int) -> GaussFactors:
    """Block Gauss factorization with z = a^-1 b and x = c a^-1.

    The top-left p x p block is the pivot; its condition number is reported
    on the returned factors.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (p + q, p + q):
        raise ValueError(f"expected ({p + q})x({p + q}) matrix")
    a, b = m[:p, :p], m[:p, p:]
    c, d = m[p:, :p], m[p:, p:]
    svals = np.linalg.svd(a, compute_uv=False)
    if svals[-1] <= PIVOT_TOL:
        raise ChartError(f"singular pivot block (smallest singular value {svals[-1]:.3e})")
    z = np.linalg.solve(a, b)
    x = np.linalg.solve(a.T, c.T).T
    diag = (a, d - c @ z)
    return GaussFactors(x, diag, z, False, pivot_condition=float(svals[0] / svals[-1]))


# --- coherent-state group action ---------------------------------------------------


@dataclass(frozen=True)
class ActionResult:
    """Cocycle data of Gamma(g) at a chart point: multiplier = base**exponent."""

    base: complex
    exponent: float
    moved: np.ndarray | complex

    @property
    def multiplier(self) -> complex:
        return self.base ** self.exponent


def action_factorize(g: GroupElement, z, sigma=1) -> ActionResult:
    """Factorize the product (chart element, g) and return the induced Moebius
    motion of z together with the det-power cocycle.

    The returned data satisfies [Gamma(g) Psi](z) = base**exponent * Psi(moved)
    for a representation of weight sigma in the family's sign convention.
    """
    m = g.matrix
    if g.family in _UPPER_CHART:
        p = g.shape[0]
        zm = np.atleast_2d(np.asarray(z, dtype=complex))
        a, b = m[:p, :p], m[:p, p:]
        c, d = m[p:, :p], m[p:, p:]
        pivot = a + zm @ c
        _require_invertible(pivot)
        moved = np.linalg.solve(pivot, b + zm @ d)
        return ActionResult(complex(np.linalg.det(pivot)), sigma, _squeeze(moved, z))
    if g.family in _LOWER_CHART:
        n = 1 if g.family is Family.SU11 else g.shape[0]
        zm = np.atleast_2d(np.asarray(z, dtype=complex))
        a, b = m[:n, :n], m[:n, n:]
        c, d = m[n:, :n], m[n:, n:]
        pivot = zm @ b + d
        _require_invertible(pivot)
        moved = np.linalg.solve(pivot, zm @ a + c)
        return ActionResult(complex(np.linalg.det(pivot)), -sigma, _squeeze(moved, z))
    # SO(p +- 2): z is a p-component complex row vector.  SO(p, 2) preserves
    # J- rather than the identity form; conjugating by S = diag(i, i, 1, ...)
    # (which satisfies S S~ = J-) moves it into the complex-orthogonal
    # coordinates where the vector action formula lives.
    if g.family is Family.SOP2:
        s = np.ones(m.shape[0], dtype=complex)
        s[:2] = 1j
        m = (m * s[None, :]) / s[:, None]
    return so_vector_action(m, z, sigma)


def so_vector_action(matrix, z, sigma=1) -> ActionResult:
    """General SO(p + 2, C) action on the p-vector chart: multiplier base
    e^phi(g) = (e+ - (z.z) e~) A e / 2 + z C e and the matching moved point.

    The matrix must be complex orthogonal (m m~ = I); real SO(p, 2) elements
    enter via the S-conjugation in action_factorize.
    """
    m = np.asarray(matrix, dtype=complex)
    zv = np.asarray(z, dtype=complex).reshape(-1)
    e_col = np.array([-1j, 1.0])
    e_tilde = np.array([-1j, 1.0])
    e_dag = np.array([1j, 1.0])
    a2, b = m[:2, :2], m[:2, 2:]
    c, d = m[2:, :2], m[2:, 2:]
    zz = np.dot(zv, zv)
    row = 0.5 * (e_dag - zz * e_tilde)
    base = complex(row @ a2 @ e_col + zv @ c @ e_col)
    if abs(base) <= PIVOT_TOL:
        raise ChartError("cocycle base vanishes: point outside the dense chart")
    moved = (row @ b + zv @ d) / base
    return ActionResult(base, sigma, moved)


def _require_invertible(pivot: np.ndarray) -> None:
    svals = np.linalg.svd(pivot, compute_uv=False)
    if svals[-1] <= PIVOT_TOL:
        raise ChartError("singular action pivot: point outside the dense chart")


def _squeeze(moved: np.ndarray, z_in) -> np.ndarray | complex:
    if np.isscalar(z_in) or np.asarray(z_in).ndim == 0:
        return complex(moved[0, 0])
    return moved


# --- generalized Iwasawa factorization for SU(3) -----------------------------------


@dataclass(frozen=True)
class IwasawaFactors:
    """g = Z omega with Z lower triangular and omega complex orthogonal."""

    Z: np.ndarray
    omega: np.ndarray

    def residual(self, g) -> float:
        r1 = _norm(self.Z @ self.omega - np.asarray(g, dtype=complex))
        r2 = _norm(self.omega @ self.omega.T - np.eye(3))
        return max(r1, r2)


def iwasawa_su3(g, validate: bool = True) -> IwasawaFactors:
    """Factor a special-unitary 3x3 matrix as Z(g) omega(g).

    Bilinear Gram-Schmidt on the rows with the symmetric (non-conjugated)
    form u.v = sum_i u_i v_i.  Diagonal branch: principal square root of the
    bilinear norm (Re >= 0, tie Im >= 0); the determinant of omega is fixed
    to +1 by flipping the last row pair if necessary.  Rows with vanishing
    bilinear norm lie outside the dense chart and raise ChartError.

    ``validate=False`` admits general SL(3, C) input: cocycle compositions
    pass through complex-orthogonal points where the factorization still
    exists but unitarity is lost.
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (3, 3):
        raise ValueError("iwasawa_su3 needs a 3x3 matrix")
    if validate and (
        _norm(g.conj().T @ g - np.eye(3)) > 1e-8 or abs(np.linalg.det(g) - 1) > 1e-8
    ):
        raise MembershipError("iwasawa_su3 input is not special unitary")
    z = np.zeros((3, 3), dtype=complex)
    omega = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        v = g[i].copy()
        for k in range(i):
            z[i, k] = np.dot(g[i], omega[k])
            v = v - z[i, k] * omega[k]
        vv = np.dot(v, v)
        if abs(vv) <= PIVOT_TOL:
            raise ChartError(f"isotropic row {i + 1}: bilinear norm {vv:.3e}")
        z[i, i] = np.sqrt(vv)
        omega[i] = v / z[i, i]
    if np.linalg.det(omega).real < 0:
        omega[2] = -omega[2]
        z[2, 2] = -z[2, 2]
    return IwasawaFactors(z, omega)


# --- random sampling (test and verification support) -------------------------------


def random_element(
    family: Family,
    shape: tuple,
    rng: np.random.Generator,
    scale: float = 0.4,
) -> GroupElement:
    """Random element via the exponential of a small Lie-algebra sample."""
    if family in (Family.SU2, Family.SUN):
        n = _matrix_size(family, shape)
        h = _random_complex(rng, (n, n), scale)
        h = (h + h.conj().T) / 2
        h -= np.trace(h) / n * np.eye(n)
        return group_element(family, expm(1j * h), shape)
    if family is Family.SUPQ:
        p, q = shape
        pp = _skew_hermitian(rng, p, scale)
        rr = _skew_hermitian(rng, q, scale)
        trace_fix = (np.trace(pp) + np.trace(rr)) / (p + q)
        pp -= trace_fix * np.eye(p)
        rr -= trace_fix * np.eye(q)
        qq = _random_complex(rng, (p, q), scale)
        x = np.block([[pp, qq], [qq.conj().T, rr]])
        return group_element(family, expm(x), shape)
    if family is Family.SU11:
        a = rng.normal(scale=scale)
        b = _random_complex(rng, (), scale)
        x = np.array([[1j * a, b], [np.conj(b), -1j * a]])
        return group_element(family, expm(x), shape)
    if family in (Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR):
        (n,) = shape
        x = _skew_hermitian(rng, n, scale)
        s = _random_complex(rng, (n, n), scale)
        if family in (Family.SP, Family.SPR):
            s = (s + s.T) / 2
        else:
            s = (s - s.T) / 2
        if family is Family.SP:
            alg = np.block([[x, -s], [np.conj(s), np.conj(x)]])
        elif family is Family.SPR:
            alg = np.block([[x, s], [np.conj(s), np.conj(x)]])
        elif family is Family.SO2N:
            alg = np.block([[x, s], [np.conj(s), np.conj(x)]])
        else:
            alg = np.block([[x, s], [-np.conj(s), np.conj(x)]])
        return group_element(family, expm(alg), shape)
    if family in (Family.SOP2, Family.SOPPLUS2):
        (p,) = shape
        n = p + 2
        w = rng.normal(scale=scale, size=(n, n))
        w = w - w.T
        j = np.eye(n)
        if family is Family.SOP2:
            j[0, 0] = j[1, 1] = -1.0
        return group_element(family, expm(w @ j), shape)
    raise ValueError(f"unknown family {family}")


def random_chart_point(
    family: Family, shape: tuple, rng: np.random.Generator, scale: float = 0.3
):
    """Random point of the coset chart matching the family's variable type."""
    if family in (Family.SU2, Family.SU11):
        return complex(_random_complex(rng, (), scale))
    if family in (Family.SUN, Family.SUPQ):
        p, q = shape
        return _random_complex(rng, (p, q), scale)
    if family in (Family.SP, Family.SPR):
        (n,) = shape
        s = _random_complex(rng, (n, n), scale)
        return (s + s.T) / 2
    if family in (Family.SO2N, Family.SOSTAR):
        (n,) = shape
        s = _random_complex(rng, (n, n), scale)
        return (s - s.T) / 2
    (p,) = shape
    return _random_complex(rng, (p,), scale)


def _random_complex(rng, size, scale):
    return rng.normal(scale=scale, size=size) + 1j * rng.normal(scale=scale, size=size)


def _skew_hermitian(rng, n, scale):
    h = _random_complex(rng, (n, n), scale)
    return (h - h.conj().T) / 2


# --- serialization ------------------------------------------------------------------


def matrix_to_json(m) -> list:
    """Row-major nested lists of [re, im] pairs."""
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def matrix_from_json(obj: list) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in obj])
