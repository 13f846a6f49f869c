"""Hom-center-symmetric algebras, their axioms and the sub-adjacent hom-Lie algebra.

A :class:`HomAlgebra` is only a container of structure constants and a
twist.  Whether it is a hom-center-symmetric algebra, a hom-Lie algebra or
neither is decided by the ``check_*`` functions, which return an
:class:`AxiomReport` listing every violated basis tuple.  Checks quantify
over basis tuples only; by multilinearity that covers all vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .exactlin import InputError, bilinear_apply, frozen, identity, rational_array, zeros


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    violations: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failed_axioms(self) -> list[str]:
        """Distinct sub-axiom ids that have at least one violation, in order."""
        seen: dict[str, None] = {}
        for v in self.violations:
            seen.setdefault(v.axiom, None)
        return list(seen)

    def first(self, axiom: str | None = None) -> Violation | None:
        for v in self.violations:
            if axiom is None or v.axiom == axiom:
                return v
        return None


def make_report(axiom: str, *parts: Iterable[Violation]) -> AxiomReport:
    violations: list[Violation] = []
    for part in parts:
        violations.extend(part)
    return AxiomReport(axiom, tuple(violations))


def nested(report: AxiomReport, prefix: str) -> list[Violation]:
    """Re-label the violations of a sub-check under ``prefix``."""
    return [Violation(f"{prefix}/{v.axiom}", v.indices, v.lhs, v.rhs) for v in report.violations]


def compare(axiom: str, lhs: np.ndarray, rhs: np.ndarray, keep=None) -> list[Violation]:
    """Violations of ``lhs == rhs`` over the leading index axes.

    The last axis holds output coordinates; every leading index tuple whose
    vectors differ becomes a violation.  ``keep(idx)`` can filter index
    tuples (used to skip mirror duplicates).
    """
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        raise ValueError(f"shape mismatch {lhs.shape} vs {rhs.shape}")
    out = []
    if lhs.size == 0:
        return out
    diff = np.any(lhs != rhs, axis=-1)
    for idx in zip(*np.nonzero(diff)):
        idx = tuple(int(i) for i in idx)
        if keep is not None and not keep(idx):
            continue
        out.append(Violation(axiom, idx, tuple(frozen(lhs[idx])), tuple(frozen(rhs[idx]))))
    return out


class HomAlgebra:
    """Structure constants ``mul[i, j, k]`` and twist matrix of an algebra.

    The twist acts on column vectors: ``alpha(e_j) = sum_i twist[i, j] e_i``.
    Instances are immutable.
    """

    __slots__ = ("mul", "twist", "name")

    def __init__(self, mul, twist, name: str | None = None):
        twist = rational_array(twist)
        if twist.ndim != 2 or twist.shape[0] != twist.shape[1]:
            raise InputError(f"twist must be square, got shape {twist.shape}")
        n = twist.shape[0]
        mul = rational_array(mul, shape=(n, n, n))
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("HomAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.twist.shape[0]

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.twist, other.twist)
        )

    def __hash__(self):
        return hash((self.dim, tuple(self.mul.ravel()), tuple(self.twist.ravel())))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<HomAlgebra{label} dim={self.dim}>"

    def product(self, x, y) -> np.ndarray:
        return bilinear_apply(self.mul, x, y)

    def alpha(self, x) -> np.ndarray:
        return frozen(np.dot(self.twist, np.asarray(x, dtype=object))) if self.dim else zeros((0,))

    def with_mul(self, mul) -> "HomAlgebra":
        return HomAlgebra(mul, self.twist)


def zero_algebra(n: int, twist=None) -> HomAlgebra:
    return HomAlgebra(zeros((n, n, n)), identity(n) if twist is None else twist)


# -- tensor forms of the axioms ------------------------------------------------


def _twisted_products(A: HomAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """(alpha(e_i e_j), alpha(e_i) alpha(e_j)) indexed [i, j, :]."""
    c, M = A.mul, A.twist
    lhs = np.einsum("ijk,lk->ijl", c, M)
    rhs = np.einsum("pi,qj,pql->ijl", M, M, c)
    return lhs, rhs


def associator_tensor(A: HomAlgebra) -> np.ndarray:
    """``T[i, j, k] = (e_i, e_j, e_k)_alpha`` as a coordinate vector."""
    c, M = A.mul, A.twist
    first = np.einsum("ijs,tk,stl->ijkl", c, M, c)
    second = np.einsum("si,jkt,stl->ijkl", M, c, c)
    return first - second


def alpha_associator(A: HomAlgebra, x, y, z) -> np.ndarray:
    """``(x, y, z)_alpha = (xy) alpha(z) - alpha(x) (yz)``."""
    n = A.dim
    for v in (x, y, z):
        if np.shape(v) != (n,):
            raise InputError(f"vector of shape {np.shape(v)} does not fit dimension {n}")
    left = A.product(A.product(x, y), A.alpha(z))
    right = A.product(A.alpha(x), A.product(y, z))
    return frozen(np.asarray(left, dtype=object) - np.asarray(right, dtype=object))


def check_multiplicative(A: HomAlgebra) -> AxiomReport:
    lhs, rhs = _twisted_products(A)
    return make_report("multiplicative", compare("multiplicative", lhs, rhs))


def check_center_symmetric(A: HomAlgebra) -> AxiomReport:
    """Hom-center-symmetric axioms: multiplicative twist and
    ``(x, y, z)_alpha == (z, y, x)_alpha``.

    Symmetry violations are listed once per unordered pair of outer
    indices, as ``(i, j, k)`` with ``i < k``.
    """
    mult = check_multiplicative(A)
    T = associator_tensor(A)
    sym = compare("center-symmetric", T, T.transpose(2, 1, 0, 3), keep=lambda idx: idx[0] < idx[2])
    return make_report("hom-csa", mult.violations, sym)


def left_rep(A: HomAlgebra) -> np.ndarray:
    """``L[i]`` is the matrix of ``y -> e_i y``."""
    return frozen(A.mul.transpose(0, 2, 1))


def right_rep(A: HomAlgebra) -> np.ndarray:
    """``R[i]`` is the matrix of ``y -> y e_i``."""
    return frozen(A.mul.transpose(1, 2, 0))


def ad_rep(A: HomAlgebra) -> np.ndarray:
    return frozen(left_rep(A) - right_rep(A))


def commutator_algebra(A: HomAlgebra) -> HomAlgebra:
    c = A.mul
    return HomAlgebra(c - c.transpose(1, 0, 2), A.twist)


def check_skew(A: HomAlgebra) -> AxiomReport:
    c = A.mul
    return make_report(
        "skew", compare("skew", c, -c.transpose(1, 0, 2), keep=lambda idx: idx[0] <= idx[1])
    )


def jacobiator_tensor(A: HomAlgebra) -> np.ndarray:
    """``J[i, j, k] = [a(e_i), [e_j, e_k]] + [a(e_j), [e_k, e_i]] + [a(e_k), [e_i, e_j]]``."""
    b, M = A.mul, A.twist
    T = np.einsum("si,jkt,stl->ijkl", M, b, b)
    return T + T.transpose(2, 0, 1, 3) + T.transpose(1, 2, 0, 3)


def check_hom_jacobi(A: HomAlgebra) -> AxiomReport:
    """Hom-Lie axioms: skew bracket, multiplicative twist, twisted Jacobi."""
    J = jacobiator_tensor(A)
    jac = compare("hom-jacobi", J, np.zeros_like(J), keep=lambda idx: idx[0] <= idx[1] <= idx[2])
    return make_report(
        "hom-lie", check_skew(A).violations, check_multiplicative(A).violations, jac
    )


def check_homomorphism(f, A1: HomAlgebra, A2: HomAlgebra) -> AxiomReport:
    """``f(xy) = f(x) f(y)`` on basis pairs and ``f alpha_1 = alpha_2 f``."""
    f = rational_array(f)
    if f.shape != (A2.dim, A1.dim):
        raise InputError(f"map of shape {f.shape} does not go from dim {A1.dim} to dim {A2.dim}")
    lhs = np.einsum("ijk,lk->ijl", A1.mul, f)
    rhs = np.einsum("pi,qj,pql->ijl", f, f, A2.mul)
    mul_part = compare("product", lhs, rhs)
    # compare column by column: index is the input basis vector
    tw_l = np.dot(f, A1.twist) if A1.dim else zeros((A2.dim, 0))
    tw_r = np.dot(A2.twist, f) if A2.dim else zeros((0, A1.dim))
    twist_part = compare("twist", np.asarray(tw_l).T, np.asarray(tw_r).T)
    return make_report("homomorphism", mul_part, twist_part)


def vec(values: Sequence) -> np.ndarray:
    return rational_array(list(values))
