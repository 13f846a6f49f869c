"""Representations of hom-Lie algebras and bimodules of hom-CSAs.

Bimodule field order is fixed as ``(base, l, r, phi)``; the module
dimension is read off ``phi``.  All actions are action tensors of shape
``(base.dim, m, m)``.
"""

from __future__ import annotations

import numpy as np

from .exactlin import InputError, block_diag, frozen, kron, rational_array, zeros
from .homcore import (
    AxiomReport,
    HomAlgebra,
    check_center_symmetric,
    check_skew,
    commutator_algebra,
    compare,
    left_rep,
    make_report,
    nested,
    right_rep,
)


def _action(act, n: int, m: int, name: str) -> np.ndarray:
    act = rational_array(act)
    if act.size == 0:
        act = zeros((n, m, m))
    if act.shape != (n, m, m):
        raise InputError(f"{name} must have shape {(n, m, m)}, got {act.shape}")
    return act


def _square(mat, name: str) -> np.ndarray:
    mat = rational_array(mat)
    if mat.size == 0 and mat.ndim < 2:
        mat = zeros((0, 0))
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise InputError(f"{name} must be square, got shape {mat.shape}")
    return mat


class _Record:
    __slots__ = ()
    _arrays: tuple = ()

    def __setattr__(self, key, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _set(self, **kw):
        for k, v in kw.items():
            object.__setattr__(self, k, v)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        for name in self.__slots__:
            a, b = getattr(self, name), getattr(other, name)
            if isinstance(a, np.ndarray):
                if a.shape != b.shape or not np.array_equal(a, b):
                    return False
            elif a != b:
                return False
        return True

    def __hash__(self):
        parts = []
        for name in self.__slots__:
            a = getattr(self, name)
            parts.append(tuple(a.ravel()) if isinstance(a, np.ndarray) else a)
        return hash(tuple(parts))


class Representation(_Record):
    """``rho`` of a (hom-Lie) base algebra on an ``m``-dimensional space with twist ``psi``."""

    __slots__ = ("base", "rho", "psi")

    def __init__(self, base: HomAlgebra, rho, psi):
        psi = _square(psi, "psi")
        self._set(base=base, rho=_action(rho, base.dim, psi.shape[0], "rho"), psi=psi)

    @property
    def mod_dim(self) -> int:
        return self.psi.shape[0]

    def __repr__(self):
        return f"<Representation base_dim={self.base.dim} mod_dim={self.mod_dim}>"


class Bimodule(_Record):
    """Left/right actions ``l``, ``r`` of a base algebra with module twist ``phi``."""

    __slots__ = ("base", "l", "r", "phi")

    def __init__(self, base: HomAlgebra, l, r, phi):
        phi = _square(phi, "phi")
        m = phi.shape[0]
        self._set(
            base=base,
            l=_action(l, base.dim, m, "l"),
            r=_action(r, base.dim, m, "r"),
            phi=phi,
        )

    @property
    def mod_dim(self) -> int:
        return self.phi.shape[0]

    def __repr__(self):
        return f"<Bimodule base_dim={self.base.dim} mod_dim={self.mod_dim}>"


# -- action-tensor algebra ---------------------------------------------------


def twisted_action(act: np.ndarray, twist: np.ndarray) -> np.ndarray:
    """``out[i] = act(alpha(e_i)) = sum_s twist[s, i] act[s]``."""
    return np.einsum("si,suv->iuv", twist, act)


def product_action(act: np.ndarray, mul: np.ndarray) -> np.ndarray:
    """``out[i, j] = act(e_i e_j) = sum_k mul[i, j, k] act[k]``."""
    return np.einsum("ijk,kuv->ijuv", mul, act)


def compose_actions(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """``out[i, j] = f[i] o g[j]``."""
    return np.einsum("iuw,jwv->ijuv", f, g)


def compare_maps(axiom: str, lhs, rhs, keep=None):
    """Compare families of matrices ``[..., out, in]`` column by column.

    Violation indices end with the input basis index of the column.
    """
    lhs = np.swapaxes(np.asarray(lhs, dtype=object), -1, -2)
    rhs = np.swapaxes(np.asarray(rhs, dtype=object), -1, -2)
    return compare(axiom, lhs, rhs, keep=keep)


# -- hom-Lie representations -------------------------------------------------


def check_hom_lie_rep(R: Representation) -> AxiomReport:
    """``rho(a(x)) psi = psi rho(x)`` and
    ``rho([x, y]) psi = rho(a(x)) rho(y) - rho(a(y)) rho(x)``."""
    g = R.base
    rho, psi = R.rho, R.psi
    pre = nested(check_skew(g), "precondition")
    rho_a = twisted_action(rho, g.twist)
    eq6 = compare_maps(
        "twist-compatible",
        np.einsum("iuw,wv->iuv", rho_a, psi),
        np.einsum("uw,iwv->iuv", psi, rho),
    )
    lhs = np.einsum("ijuw,wv->ijuv", product_action(rho, g.mul), psi)
    comp = compose_actions(rho_a, rho)
    rhs = comp - comp.transpose(1, 0, 2, 3)
    eq7 = compare_maps("bracket", lhs, rhs, keep=lambda idx: idx[0] < idx[1])
    return make_report("hom-lie-rep", pre, eq6, eq7)


def semidirect_hom_lie(R: Representation) -> HomAlgebra:
    """Bracket ``[x+u, y+v] = [x, y] + rho(x) v - rho(y) u`` on ``g + V``."""
    n, m = R.base.dim, R.mod_dim
    b = np.zeros((n + m,) * 3, dtype=int).astype(object)
    b[:n, :n, :n] = R.base.mul
    # [e_i, v_q] = rho(e_i) v_q ; [v_q, e_j] = -rho(e_j) v_q
    b[:n, n:, n:] = R.rho.transpose(0, 2, 1)
    b[n:, :n, n:] = -R.rho.transpose(2, 0, 1)
    return HomAlgebra(b, block_diag(R.base.twist, R.psi))


# -- bimodules -----------------------------------------------------------------


def check_bimodule(B: Bimodule) -> AxiomReport:
    """The three bimodule identity families, plus the base being a hom-CSA.

    * ``phi l_x = l_{a(x)} phi`` and ``phi r_x = r_{a(x)} phi``
    * ``l_{a(x)} l_y - l_{xy} phi = r_{yx} phi - r_{a(x)} r_y``
    * ``l_{a(x)} r_y - r_{a(y)} l_x = l_{a(y)} r_x - r_{a(x)} l_y``

    ``l_{xy}`` is expanded through the structure constants of the base.
    """
    A = B.base
    l, r, phi = B.l, B.r, B.phi
    pre = nested(check_center_symmetric(A), "precondition")
    l_a = twisted_action(l, A.twist)
    r_a = twisted_action(r, A.twist)
    phi_l = np.einsum("uw,iwv->iuv", phi, l)
    phi_r = np.einsum("uw,iwv->iuv", phi, r)
    eq11l = compare_maps("twist-left", phi_l, np.einsum("iuw,wv->iuv", l_a, phi))
    eq11r = compare_maps("twist-right", phi_r, np.einsum("iuw,wv->iuv", r_a, phi))

    l_prod = np.einsum("ijuw,wv->ijuv", product_action(l, A.mul), phi)
    r_prod = np.einsum("ijuw,wv->ijuv", product_action(r, A.mul), phi)
    lhs12 = compose_actions(l_a, l) - l_prod
    # r_{yx} phi for the pair (x, y) = (e_i, e_j) is r_prod[j, i]
    rhs12 = r_prod.transpose(1, 0, 2, 3) - compose_actions(r_a, r)
    eq12 = compare_maps("left-right", lhs12, rhs12)

    lr = compose_actions(l_a, r)
    rl = compose_actions(r_a, l)
    lhs13 = lr - rl.transpose(1, 0, 2, 3)
    rhs13 = lr.transpose(1, 0, 2, 3) - rl
    eq13 = compare_maps("mixed", lhs13, rhs13, keep=lambda idx: idx[0] < idx[1])
    return make_report("bimodule", pre, eq11l, eq11r, eq12, eq13)


def regular_bimodule(A: HomAlgebra) -> Bimodule:
    return Bimodule(A, left_rep(A), right_rep(A), A.twist)


def semidirect_hom_csa(B: Bimodule) -> HomAlgebra:
    """Product ``(x+u)(y+v) = xy + l(x) v + r(y) u`` with ``u v = 0``."""
    n, m = B.base.dim, B.mod_dim
    c = np.zeros((n + m,) * 3, dtype=int).astype(object)
    c[:n, :n, :n] = B.base.mul
    c[:n, n:, n:] = B.l.transpose(0, 2, 1)
    c[n:, :n, n:] = B.r.transpose(2, 0, 1)
    return HomAlgebra(c, block_diag(B.base.twist, B.phi))


def bimodule_to_rep(B: Bimodule) -> Representation:
    """``(l - r, phi)`` as a representation of the sub-adjacent hom-Lie algebra."""
    return Representation(commutator_algebra(B.base), frozen(B.l - B.r), B.phi)


def rep_to_bimodule(R: Representation) -> Bimodule:
    """``(rho, 0, psi)``."""
    return Bimodule(R.base, R.rho, zeros(R.rho.shape), R.psi)


def dual_bimodule(B: Bimodule) -> Bimodule:
    """``(r*, l*, phi*)`` on the dual space: left action is ``r*``, right is ``l*``."""
    return Bimodule(
        B.base,
        frozen(B.r.transpose(0, 2, 1)),
        frozen(B.l.transpose(0, 2, 1)),
        frozen(B.phi.T),
    )


def tensor_product_rep(RU: Representation, RV: Representation) -> Representation:
    """``rho_U (x) psi_V + psi_U (x) rho_V`` on ``U (x) V`` (left factor major)."""
    if RU.base != RV.base:
        raise InputError("representations are over different algebras")
    n = RU.base.dim
    mu, mv = RU.mod_dim, RV.mod_dim
    rho = np.empty((n, mu * mv, mu * mv), dtype=object)
    for i in range(n):
        rho[i] = kron(RU.rho[i], RV.psi) + kron(RU.psi, RV.rho[i])
    return Representation(RU.base, rho, kron(RU.psi, RV.psi))
