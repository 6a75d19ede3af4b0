import json
from fractions import Fraction
from itertools import product

import pytest

from cstriplets.exact import GaussianRational
from cstriplets.groups import Family
from cstriplets.kernels import KernelSpec, expand_kernel
from cstriplets.polynomial import (
    BargmannPolynomial,
    BilinearKernelPolynomial,
    PolyDiffOperator,
    apply_kernel,
    bargmann_pair,
    differential_operator_apply,
    mi_make,
    operator_commutator_apply,
    pair_through_kernel,
)
from cstriplets.rankone import su11_operator, su2_operator

Z = BargmannPolynomial.variable((1, 1))
ONE = BargmannPolynomial.one((1, 1))


def mono(nu, shape=(1, 1), var=(1, 1)):
    return BargmannPolynomial.monomial(shape, {var: nu} if nu else {})


def test_pair_basic_values():
    assert bargmann_pair(Z, Z) == GaussianRational(Fraction(1))
    assert bargmann_pair(mono(2), mono(3)).is_zero
    # differentiate z^2 twice: 2
    assert bargmann_pair(mono(2), mono(2)) == GaussianRational(Fraction(2))


def test_pair_shape_mismatch():
    with pytest.raises(ValueError):
        bargmann_pair(Z, BargmannPolynomial.variable((2, 2)))


def test_pair_conjugate_symmetry():
    a = BargmannPolynomial((1, 1), {mi_make({(1, 1): 1}): GaussianRational(Fraction(1), Fraction(2))})
    b = BargmannPolynomial((1, 1), {mi_make({(1, 1): 1}): GaussianRational(Fraction(3), Fraction(-1)),
                                    mi_make({}): GaussianRational(Fraction(1))})
    assert bargmann_pair(a, b) == bargmann_pair(b, a).conjugate()


@pytest.mark.parametrize("shape", [(1, 1), (2, 1), (2, 2)])
def test_monomial_orthogonality_degree8(shape):
    variables = [(i, v) for i in range(1, shape[0] + 1) for v in range(1, shape[1] + 1)]
    exps = []
    for combo in product(range(9), repeat=len(variables)):
        if sum(combo) <= 8:
            exps.append(dict(zip(variables, combo)))
    exps = exps[:64]
    for ea in exps:
        for eb in exps:
            pa = BargmannPolynomial.monomial(shape, ea)
            pb = BargmannPolynomial.monomial(shape, eb)
            val = bargmann_pair(pa, pb)
            if mi_make(ea) == mi_make(eb):
                want = 1
                for e in ea.values():
                    for t in range(1, e + 1):
                        want *= t
                assert val == GaussianRational(Fraction(want))
            else:
                assert val.is_zero


def test_pair_through_kernel_examples():
    spec = KernelSpec(Family.SU2, 2, (1, 1), 3)
    kernel = expand_kernel(spec)
    assert pair_through_kernel(ONE, kernel, ONE) == GaussianRational(Fraction(1))
    assert pair_through_kernel(Z, kernel, Z) == GaussianRational(Fraction(2))
    z3 = mono(3)
    assert pair_through_kernel(z3, kernel, z3).is_zero


def test_pair_through_kernel_degree_guard():
    spec = KernelSpec(Family.SU2, 2, (1, 1), 2)
    kernel = expand_kernel(spec)
    with pytest.raises(ValueError):
        pair_through_kernel(mono(3), kernel, ONE)
    with pytest.raises(ValueError):
        apply_kernel(kernel, mono(3))


def test_apply_kernel_examples():
    kernel = expand_kernel(KernelSpec(Family.SU2, 2, (1, 1), 3))
    assert apply_kernel(kernel, Z) == Z.scale(2)
    assert apply_kernel(kernel, ONE) == ONE
    kernel11 = expand_kernel(KernelSpec(Family.SU11, 2, (1, 1), 1))
    assert apply_kernel(kernel11, Z) == Z.scale(2)


@pytest.mark.parametrize(
    "spec",
    [
        KernelSpec(Family.SU2, 3, (1, 1), 4),
        KernelSpec(Family.SU11, 2, (1, 1), 4),
        KernelSpec(Family.SUN, 2, (2, 1), 3),
    ],
)
def test_apply_then_pair_equals_pair_through(spec):
    kernel = expand_kernel(spec)
    shape = kernel.shape
    variables = [(i, v) for i in range(1, shape[0] + 1) for v in range(1, shape[1] + 1)]
    monos = []
    for combo in product(range(spec.degree_cutoff + 1), repeat=len(variables)):
        if sum(combo) <= spec.degree_cutoff:
            monos.append(BargmannPolynomial.monomial(shape, dict(zip(variables, combo))))
    for a in monos:
        for b in monos:
            assert bargmann_pair(a, apply_kernel(kernel, b)) == pair_through_kernel(a, kernel, b)


def test_kernel_hermiticity_enforced():
    bad = {(mi_make({(1, 1): 1}), mi_make({})): GaussianRational(Fraction(1))}
    with pytest.raises(ValueError):
        BilinearKernelPolynomial((1, 1), bad, 2)


def test_differential_operator_examples():
    ddz = PolyDiffOperator((1, 1), ((ONE, (1, 1)),))
    assert differential_operator_apply(ddz, mono(2)) == Z.scale(2)
    # (2jz - z^2 d/dz) z = 2z^2 - z^2 = z^2 at 2j = 2
    jminus = su2_operator(2, "J-")
    assert jminus.apply(Z) == Z * Z
    # (j - z d/dz) z^2 = -z^2 at j = 1
    j0 = su2_operator(2, "J0")
    assert j0.apply(mono(2)) == mono(2).scale(-1)


@pytest.mark.parametrize("two_j", [1, 2, 4, 7])
def test_su2_commutators_on_monomials(two_j):
    jp, jm, j0 = (su2_operator(two_j, g) for g in ("J+", "J-", "J0"))
    for nu in range(9):
        f = mono(nu)
        assert operator_commutator_apply(jp, jm, f) == j0.apply(f).scale(2)
        assert operator_commutator_apply(j0, jp, f) == jp.apply(f)
        assert operator_commutator_apply(j0, jm, f) == jm.apply(f).scale(-1)


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_su11_commutators_on_monomials(lam):
    jp, jm, j0 = (su11_operator(lam, g) for g in ("J+", "J-", "J0"))
    for nu in range(9):
        f = mono(nu)
        assert operator_commutator_apply(jm, jp, f) == j0.apply(f).scale(2)
        assert operator_commutator_apply(j0, jp, f) == jp.apply(f)


def test_polynomial_json_roundtrip():
    p = BargmannPolynomial(
        (2, 2),
        {
            mi_make({(1, 1): 2, (2, 1): 1}): GaussianRational(Fraction(3, 7), Fraction(-1, 2)),
            mi_make({}): GaussianRational(Fraction(-5)),
        },
    )
    obj = json.loads(json.dumps(p.to_json_obj()))
    assert BargmannPolynomial.from_json_obj(obj) == p


def test_kernel_json_roundtrip():
    kernel = expand_kernel(KernelSpec(Family.SUPQ, -2, (2, 1), 3))
    obj = json.loads(json.dumps(kernel.to_json_obj()))
    assert BilinearKernelPolynomial.from_json_obj(obj) == kernel


def test_kernel_json_is_canonical():
    k1 = expand_kernel(KernelSpec(Family.SU2, 4, (1, 1), 4))
    k2 = expand_kernel(KernelSpec(Family.SU2, 4, (1, 1), 4))
    assert json.dumps(k1.to_json_obj(), sort_keys=True) == json.dumps(k2.to_json_obj(), sort_keys=True)
