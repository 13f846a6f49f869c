import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from homcsa.exactlin import InputError, identity, rational_array, zeros
from homcsa.homcore import (
    HomAlgebra,
    ad_rep,
    alpha_associator,
    check_center_symmetric,
    check_hom_jacobi,
    check_homomorphism,
    check_multiplicative,
    check_skew,
    commutator_algebra,
    left_rep,
    right_rep,
    zero_algebra,
)
from strategies import TERNARY, arrays, matrices, vectors

SWAP = [[0, 1], [1, 0]]


def rnd_algebra(rng, n, vals=(-1, 0, 1), twist=None):
    c = [[[rng.choice(vals) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    M = twist if twist is not None else [[rng.choice(vals) for _ in range(n)] for _ in range(n)]
    return HomAlgebra(c, M)


def cross_product_algebra():
    c = np.zeros((3, 3, 3), dtype=int)
    for i, j, k, s in [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]:
        c[i, j, k] = s
        c[j, i, k] = -s
    return HomAlgebra(c.tolist(), identity(3))


def dual_numbers():
    """Commutative associative: e0 unit, e1^2 = 0."""
    c = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return HomAlgebra(c, identity(2))


# -- multiplicativity ------------------------------------------------------------------


def test_multiplicative_zero_product_any_twist():
    assert check_multiplicative(HomAlgebra(zeros((2, 2, 2)), [[3, -1], [2, 5]])).passed


def test_multiplicative_identity_twist():
    rng = random.Random(0)
    for _ in range(10):
        assert check_multiplicative(rnd_algebra(rng, 2, twist=identity(2))).passed


def test_multiplicative_scaled_idempotent():
    A = HomAlgebra([[[1]]], [[2]])
    rep = check_multiplicative(A)
    assert not rep.passed
    v = rep.violations[0]
    assert v.indices == (0, 0)
    assert v.lhs == (2,) and v.rhs == (4,)


# -- alpha-associator ------------------------------------------------------------------


def test_associator_vanishes_for_associative():
    A = dual_numbers()
    for i in range(2):
        for j in range(2):
            for k in range(2):
                e = [identity(2)[t] for t in (i, j, k)]
                assert not alpha_associator(A, *e).any()


def test_associator_zero_product():
    A = HomAlgebra(zeros((2, 2, 2)), SWAP)
    assert not alpha_associator(A, [1, 2], [3, 4], [5, 6]).any()


def test_associator_matches_two_step_oracle():
    rng = random.Random(1)
    for _ in range(20):
        A = rnd_algebra(rng, 2)
        c, M = oracles.to_lists(A.mul), oracles.to_lists(A.twist)
        for _ in range(4):
            x, y, z = ([Fraction(rng.randint(-2, 2)) for _ in range(2)] for _ in range(3))
            assert oracles.to_lists(alpha_associator(A, x, y, z)) == oracles.associator(c, M, x, y, z)


def test_associator_rejects_bad_vectors():
    with pytest.raises(InputError):
        alpha_associator(dual_numbers(), [1], [1, 0], [1, 0])


@settings(max_examples=40, deadline=None)
@given(arrays((2, 2, 2), TERNARY), matrices(2, elements=TERNARY), vectors(2), vectors(2), vectors(2), vectors(2), st.sampled_from([-1, 2, Fraction(1, 2)]))
def test_associator_trilinear(c, M, x, x2, y, z, s):
    A = HomAlgebra(c, M)
    base = alpha_associator(A, x, y, z)
    for pos in range(3):
        args = [x, y, z]
        other = list(args)
        args[pos] = args[pos] * s + x2
        other[pos] = x2
        lhs = alpha_associator(A, *args)
        rhs = base * s + alpha_associator(A, *other)
        assert np.array_equal(lhs, rhs)


# -- center symmetry -------------------------------------------------------------------


def test_center_symmetric_zero_product():
    assert check_center_symmetric(HomAlgebra(zeros((3, 3, 3)), [[1, 2, 0], [0, 1, 0], [4, 0, 0]])).passed


def test_center_symmetric_commutative_associative():
    assert check_center_symmetric(dual_numbers()).passed


def test_center_symmetric_search_instance_and_perturbation(corpus2):
    A = next(
        a for a in corpus2
        if not np.array_equal(a.twist, identity(2))
        and np.array_equal(np.dot(a.twist, a.twist), identity(2))
        and a.mul.any()
    )
    assert check_center_symmetric(A).passed
    assert oracles.is_hom_csa(oracles.to_lists(A.mul), oracles.to_lists(A.twist))
    broken = None
    for idx in np.ndindex(A.mul.shape):
        mul = A.mul.copy()
        mul[idx] = mul[idx] + 1
        cand = A.with_mul(mul)
        if not check_center_symmetric(cand).passed:
            broken = cand
            break
    assert broken is not None
    rep = check_center_symmetric(broken)
    assert rep.violations and all(len(v.indices) in (2, 3) for v in rep.violations)
    assert not oracles.is_hom_csa(oracles.to_lists(broken.mul), oracles.to_lists(broken.twist))


def test_center_symmetric_separates_failure_kinds():
    A = HomAlgebra([[[1]]], [[2]])
    assert check_center_symmetric(A).failed_axioms[0] == "multiplicative"
    # only e0 e1 = e0, identity twist: multiplicative, but (e0,e1,e1) breaks symmetry
    c = [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]
    B = HomAlgebra(c, identity(2))
    rep = check_center_symmetric(B)
    assert not rep.passed and rep.failed_axioms == ["center-symmetric"]
    assert not oracles.is_hom_csa(oracles.to_lists(B.mul), oracles.to_lists(B.twist))
    assert all(v.indices[0] < v.indices[2] for v in rep.violations)


@settings(max_examples=150, deadline=None)
@given(arrays((2, 2, 2), TERNARY), matrices(2, elements=TERNARY))
def test_center_symmetric_agrees_with_oracle(c, M):
    A = HomAlgebra(c, M)
    assert check_center_symmetric(A).passed == oracles.is_hom_csa(oracles.to_lists(c), oracles.to_lists(M))


@settings(max_examples=150, deadline=None)
@given(arrays((2, 2, 2), TERNARY))
def test_identity_twist_is_plain_center_symmetry(c):
    A = HomAlgebra(c, identity(2))
    assert check_center_symmetric(A).passed == oracles.is_center_symmetric_untwisted(oracles.to_lists(c))


def test_identity_twist_plain_center_symmetry_dim3():
    rng = random.Random(2)
    for _ in range(60):
        A = rnd_algebra(rng, 3, vals=(0, 0, 0, 1, -1), twist=identity(3))
        assert check_center_symmetric(A).passed == oracles.is_center_symmetric_untwisted(oracles.to_lists(A.mul))


def test_dimension_zero_is_vacuous():
    A = zero_algebra(0)
    for check in (check_multiplicative, check_center_symmetric, check_skew, check_hom_jacobi):
        assert check(A).passed
    assert commutator_algebra(A).dim == 0


# -- representations of the product --------------------------------------------------


def test_reps_of_zero_product():
    A = HomAlgebra(zeros((2, 2, 2)), identity(2))
    for rep in (left_rep(A), right_rep(A), ad_rep(A)):
        assert not rep.any()


def test_ad_vanishes_when_commutative():
    assert not ad_rep(dual_numbers()).any()


def test_left_right_match_direct_products():
    rng = random.Random(3)
    A = rnd_algebra(rng, 2, vals=(-2, -1, 0, 1, 3))
    L, R = left_rep(A), right_rep(A)
    c = oracles.to_lists(A.mul)
    for i in range(2):
        for j in range(2):
            ei, ej = oracles.basis(2, i), oracles.basis(2, j)
            assert oracles.apply(oracles.to_lists(L[i]), ej) == oracles.product(c, ei, ej)
            assert oracles.apply(oracles.to_lists(R[i]), ej) == oracles.product(c, ej, ei)


def test_ad_is_left_minus_right():
    rng = random.Random(4)
    A = rnd_algebra(rng, 3)
    ad, L, R = ad_rep(A), left_rep(A), right_rep(A)
    for i in range(3):
        assert np.array_equal(ad[i], L[i] - R[i])


# -- commutator and skew ---------------------------------------------------------------


def test_commutator_of_commutative_is_zero():
    assert not commutator_algebra(dual_numbers()).mul.any()


def test_commutator_twice_doubles():
    rng = random.Random(5)
    A = rnd_algebra(rng, 2)
    once = commutator_algebra(A)
    twice = commutator_algebra(once)
    assert np.array_equal(twice.mul, 2 * once.mul)
    assert np.array_equal(twice.twist, A.twist)


def test_commutator_sample_of_corpus_is_hom_lie(corpus2):
    rng = random.Random(6)
    for A in rng.sample(corpus2, 150):
        g = commutator_algebra(A)
        assert check_hom_jacobi(g).passed
        assert oracles.is_hom_lie(oracles.to_lists(g.mul), oracles.to_lists(g.twist))


def test_commutator_random_dim3_hom_csa():
    # dim-3 hom-CSAs with identity twist from sparse random products
    rng = random.Random(7)
    found = 0
    for _ in range(4000):
        A = rnd_algebra(rng, 3, vals=(0,) * 14 + (1, -1), twist=identity(3))
        if check_center_symmetric(A).passed:
            found += 1
            assert check_hom_jacobi(commutator_algebra(A)).passed
    assert found > 10


def test_skew_examples():
    assert check_skew(HomAlgebra(zeros((2, 2, 2)), identity(2))).passed
    rng = random.Random(8)
    assert check_skew(commutator_algebra(rnd_algebra(rng, 3))).passed
    sym = HomAlgebra([[[0, 0], [1, 0]], [[1, 0], [0, 0]]], identity(2))
    rep = check_skew(sym)
    assert not rep.passed and rep.violations[0].indices == (0, 1)


# -- hom-Jacobi ----------------------------------------------------------------------


def test_hom_jacobi_zero_and_cross_product():
    assert check_hom_jacobi(HomAlgebra(zeros((2, 2, 2)), SWAP)).passed
    assert check_hom_jacobi(cross_product_algebra()).passed


def test_hom_jacobi_broken_cross_product():
    c = cross_product_algebra().mul.copy()
    c[0, 1, 0] += 1
    c[1, 0, 0] -= 1
    rep = check_hom_jacobi(HomAlgebra(c, identity(3)))
    assert rep.failed_axioms == ["hom-jacobi"]


@settings(max_examples=150, deadline=None)
@given(arrays((2, 2, 2), TERNARY), matrices(2, elements=TERNARY))
def test_hom_jacobi_agrees_with_oracle(c, M):
    g = commutator_algebra(HomAlgebra(c, M))
    assert check_hom_jacobi(g).passed == oracles.is_hom_lie(oracles.to_lists(g.mul), oracles.to_lists(M))


def test_hom_jacobi_needs_skew():
    rep = check_hom_jacobi(HomAlgebra([[[1]]], [[1]]))
    assert "skew" in rep.failed_axioms


# -- homomorphisms -----------------------------------------------------------------------


def test_homomorphism_identity_and_zero():
    A = dual_numbers()
    assert check_homomorphism(identity(2), A, A).passed
    assert check_homomorphism(zeros((0, 2)), A, zero_algebra(0)).passed


def test_homomorphism_twist_failure():
    A1 = HomAlgebra(zeros((2, 2, 2)), SWAP)
    A2 = HomAlgebra(zeros((2, 2, 2)), identity(2))
    rep = check_homomorphism(identity(2), A1, A2)
    assert rep.failed_axioms == ["twist"]
    # f alpha_1 = swap and alpha_2 f = id differ in both columns
    assert [v.indices for v in rep.violations] == [(0,), (1,)]


def test_homomorphism_product_failure():
    A = dual_numbers()
    f = rational_array([[2, 0], [0, 1]])
    rep = check_homomorphism(f, A, A)
    assert "product" in rep.failed_axioms


def test_homomorphism_shape_error():
    with pytest.raises(InputError):
        check_homomorphism(identity(3), dual_numbers(), dual_numbers())


@settings(max_examples=60, deadline=None)
@given(arrays((2, 2, 2), TERNARY), matrices(2, elements=TERNARY))
def test_report_passed_iff_no_violations(c, M):
    A = HomAlgebra(c, M)
    for rep in (check_multiplicative(A), check_center_symmetric(A), check_skew(A), check_hom_jacobi(A)):
        assert rep.passed == (len(rep.violations) == 0) == bool(rep)


def test_algebra_is_immutable_and_hashable():
    A = dual_numbers()
    with pytest.raises(AttributeError):
        A.twist = identity(2)
    with pytest.raises(ValueError):
        A.mul[0, 0, 0] = 3
    assert A == dual_numbers() and hash(A) == hash(dual_numbers())
