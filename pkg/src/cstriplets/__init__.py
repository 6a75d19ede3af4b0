"""Coherent-state triplets: exact overlap kernels, dual-space inner products,
K-matrix orthonormalization and group actions for SU(2), SU(1,1), the rotor
group, SU(3) > SO(3) and the classical-domain series."""

from .exact import ExactScalar, GaussianRational, Rational
from .groups import Family, GroupElement, group_element
from .kernels import GramBlock, KernelSpec, expand_kernel, gram_block
from .polynomial import BargmannPolynomial, BilinearKernelPolynomial, bargmann_pair
from .so3 import D2Character, RotorLabel, SLMatrix

__all__ = [
    "BargmannPolynomial",
    "BilinearKernelPolynomial",
    "D2Character",
    "ExactScalar",
    "Family",
    "GaussianRational",
    "GramBlock",
    "GroupElement",
    "KernelSpec",
    "Rational",
    "RotorLabel",
    "SLMatrix",
    "bargmann_pair",
    "expand_kernel",
    "gram_block",
    "group_element",
]

__version__ = "0.1.0"
