"""Matched pairs of hom-CSAs and of hom-Lie algebras, and the bicrossed product.

Direct sums are always ordered with the first algebra's block first.
"""

from __future__ import annotations

import numpy as np

from .exactlin import InputError, block_diag, frozen, rational_array, zeros
from .homcore import (
    AxiomReport,
    HomAlgebra,
    check_hom_jacobi,
    commutator_algebra,
    compare,
    make_report,
    nested,
)
from .repmod import Bimodule, Representation, _Record, check_bimodule, check_hom_lie_rep


def _cross(act, n: int, m: int, name: str) -> np.ndarray:
    act = rational_array(act)
    if act.size == 0:
        act = zeros((n, m, m))
    if act.shape != (n, m, m):
        raise InputError(f"{name} must have shape {(n, m, m)}, got {act.shape}")
    return act


class MatchedPairCSA(_Record):
    """``A`` acts on ``B`` through ``lA, rA``; ``B`` acts on ``A`` through ``lB, rB``."""

    __slots__ = ("A", "B", "lA", "rA", "lB", "rB")

    def __init__(self, A: HomAlgebra, B: HomAlgebra, lA, rA, lB, rB):
        n, m = A.dim, B.dim
        self._set(
            A=A,
            B=B,
            lA=_cross(lA, n, m, "lA"),
            rA=_cross(rA, n, m, "rA"),
            lB=_cross(lB, m, n, "lB"),
            rB=_cross(rB, m, n, "rB"),
        )

    def swapped(self) -> "MatchedPairCSA":
        return MatchedPairCSA(self.B, self.A, self.lB, self.rB, self.lA, self.rA)

    def __repr__(self):
        return f"<MatchedPairCSA dims=({self.A.dim}, {self.B.dim})>"


class MatchedPairHomLie(_Record):
    """``rhoG``: G acting on H (twist of H); ``rhoH``: H acting on G (twist of G)."""

    __slots__ = ("G", "H", "rhoG", "rhoH")

    def __init__(self, G: HomAlgebra, H: HomAlgebra, rhoG, rhoH):
        n, m = G.dim, H.dim
        self._set(G=G, H=H, rhoG=_cross(rhoG, n, m, "rhoG"), rhoH=_cross(rhoH, m, n, "rhoH"))

    def __repr__(self):
        return f"<MatchedPairHomLie dims=({self.G.dim}, {self.H.dim})>"


# The mixed conditions below are written for (x, y) in A and a in B with the
# result in A; the conditions with the roles of A and B exchanged are the same
# functions applied to the swapped pair.  Arrays are indexed [x, y, a, out].


def _mixed_first(A, B, lA, rA, lB, rB) -> np.ndarray:
    cA, MA, MB = A.mul, A.twist, B.twist
    t1 = np.einsum("spi,qj,pqo->ijso", lB, MA, cA)
    t2 = np.einsum("ius,uoq,qj->ijso", rA, lB, MA)
    t3 = np.einsum("us,uoq,ijq->ijso", MB, lB, cA)
    t4 = np.einsum("us,uoq,jiq->ijso", MB, rB, cA)
    t5 = np.einsum("pj,sqi,pqo->ijso", MA, rB, cA)
    t6 = np.einsum("ius,uoq,qj->ijso", lA, rB, MA)
    return t1 + t2 - t3 - t4 + t5 + t6


def _mixed_second(A, B, lA, rA, lB, rB) -> np.ndarray:
    cA, MA = A.mul, A.twist
    # F(x, y) = (r_B(a)x) a(y) + l_B(l_A(x)a) a(y) - a(x) (l_B(a)y) - r_B(r_A(y)a) a(x)
    f1 = np.einsum("spi,qj,pqo->ijso", rB, MA, cA)
    f2 = np.einsum("ius,uoq,qj->ijso", lA, lB, MA)
    f3 = np.einsum("pi,sqj,pqo->ijso", MA, lB, cA)
    f4 = np.einsum("jus,uoq,qi->ijso", rA, rB, MA)
    F = f1 + f2 - f3 - f4
    return F - F.transpose(1, 0, 2, 3)


def check_matched_pair_csa(M: MatchedPairCSA) -> AxiomReport:
    """Both bimodule conditions and the four mixed identities.

    Violations of the mixed identities are labelled ``eq-ab-1`` and
    ``eq-ab-2`` (indices ``(x, y, a)``, values in A) and ``eq-ba-1``,
    ``eq-ba-2`` (indices ``(a, b, x)``, values in B).
    """
    A, B = M.A, M.B
    bim_a = check_bimodule(Bimodule(A, M.lA, M.rA, B.twist))
    bim_b = check_bimodule(Bimodule(B, M.lB, M.rB, A.twist))
    fwd = (A, B, M.lA, M.rA, M.lB, M.rB)
    back = (B, A, M.lB, M.rB, M.lA, M.rA)
    e1 = _mixed_first(*fwd)
    e2 = _mixed_second(*fwd)
    e3 = _mixed_first(*back)
    e4 = _mixed_second(*back)
    upper = lambda idx: idx[0] < idx[1]  # noqa: E731
    return make_report(
        "matched-pair-csa",
        nested(bim_a, "A-bimodule"),
        nested(bim_b, "B-bimodule"),
        compare("eq-ab-1", e1, np.zeros_like(e1)),
        compare("eq-ab-2", e2, np.zeros_like(e2), keep=upper),
        compare("eq-ba-1", e3, np.zeros_like(e3)),
        compare("eq-ba-2", e4, np.zeros_like(e4), keep=upper),
    )


def bicross_product(M: MatchedPairCSA) -> HomAlgebra:
    """``(x+a)(y+b) = (xy + l_B(a)y + r_B(b)x) + (ab + l_A(x)b + r_A(y)a)``."""
    n, m = M.A.dim, M.B.dim
    c = np.zeros((n + m,) * 3, dtype=int).astype(object)
    c[:n, :n, :n] = M.A.mul
    c[n:, n:, n:] = M.B.mul
    # e_i * b_t = r_B(b_t) e_i + l_A(e_i) b_t
    c[:n, n:, :n] = M.rB.transpose(2, 0, 1)
    c[:n, n:, n:] = M.lA.transpose(0, 2, 1)
    # b_s * e_j = l_B(b_s) e_j + r_A(e_j) b_s
    c[n:, :n, :n] = M.lB.transpose(0, 2, 1)
    c[n:, :n, n:] = M.rA.transpose(2, 0, 1)
    return HomAlgebra(c, block_diag(M.A.twist, M.B.twist))


def _lie_mixed(G, H, rhoG, rhoH) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of ``rho_H(phi_H(a))[x, y] = ...``, indexed [x, y, a, out]."""
    bG, MG, MH = G.mul, G.twist, H.twist
    lhs = np.einsum("us,uoq,ijq->ijso", MH, rhoH, bG)
    rhs = (
        np.einsum("spi,qj,pqo->ijso", rhoH, MG, bG)
        + np.einsum("pi,sqj,pqo->ijso", MG, rhoH, bG)
        + np.einsum("jus,uoq,qi->ijso", rhoG, rhoH, MG)
        - np.einsum("ius,uoq,qj->ijso", rhoG, rhoH, MG)
    )
    return lhs, rhs


def check_matched_pair_hom_lie(M: MatchedPairHomLie) -> AxiomReport:
    """Both algebras hom-Lie, both actions representations, and the two
    compatibility identities (``eq-gh`` with values in G, ``eq-hg`` in H)."""
    G, H = M.G, M.H
    upper = lambda idx: idx[0] < idx[1]  # noqa: E731
    l1, r1 = _lie_mixed(G, H, M.rhoG, M.rhoH)
    l2, r2 = _lie_mixed(H, G, M.rhoH, M.rhoG)
    return make_report(
        "matched-pair-hom-lie",
        nested(check_hom_jacobi(G), "G"),
        nested(check_hom_jacobi(H), "H"),
        nested(check_hom_lie_rep(Representation(G, M.rhoG, H.twist)), "rep-G"),
        nested(check_hom_lie_rep(Representation(H, M.rhoH, G.twist)), "rep-H"),
        compare("eq-gh", l1, r1, keep=upper),
        compare("eq-hg", l2, r2, keep=upper),
    )


def induced_lie_matched_pair(M: MatchedPairCSA) -> MatchedPairHomLie:
    return MatchedPairHomLie(
        commutator_algebra(M.A),
        commutator_algebra(M.B),
        frozen(M.lA - M.rA),
        frozen(M.lB - M.rB),
    )


def lie_bicross_product(M: MatchedPairHomLie) -> HomAlgebra:
    """Bracket on ``G + H``:
    ``[x+a, y+b] = [x, y] + rho_H(a)y - rho_H(b)x + [a, b] + rho_G(x)b - rho_G(y)a``."""
    n, m = M.G.dim, M.H.dim
    b = np.zeros((n + m,) * 3, dtype=int).astype(object)
    b[:n, :n, :n] = M.G.mul
    b[n:, n:, n:] = M.H.mul
    b[:n, n:, :n] = -M.rhoH.transpose(2, 0, 1)
    b[:n, n:, n:] = M.rhoG.transpose(0, 2, 1)
    b[n:, :n, :n] = M.rhoH.transpose(0, 2, 1)
    b[n:, :n, n:] = -M.rhoG.transpose(2, 0, 1)
    return HomAlgebra(b, block_diag(M.G.twist, M.H.twist))
