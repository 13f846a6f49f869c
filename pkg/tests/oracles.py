"""Independent reference implementations used as test oracles.

Nothing here imports the package.  Everything works on nested Python lists
of Fractions and evaluates identities on vectors, following the defining
formulas one term at a time.  The conventions match the package: ``M[i][j]``
is the coefficient of ``e_i`` in ``M(e_j)``, ``c[i][j][k]`` the coefficient of
``e_k`` in ``e_i e_j``, ``act[i]`` the matrix by which ``e_i`` acts.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def to_lists(arr):
    """numpy object array (or nested list) -> nested lists of Fractions."""
    if hasattr(arr, "tolist"):
        arr = arr.tolist()
    if isinstance(arr, list):
        return [to_lists(x) for x in arr]
    return Fraction(arr)


def basis(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def add(*vs):
    return [sum(parts, Fraction(0)) for parts in zip(*vs)]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def scale(s, v):
    return [s * a for a in v]


def apply(M, v):
    return [sum((M[i][j] * v[j] for j in range(len(v))), Fraction(0)) for i in range(len(M))]


def matmul(A, B):
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    return [
        [sum((A[i][k] * B[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(rows)
    ]


def transpose(M):
    return [list(r) for r in zip(*M)] if M else []


def product(c, x, y):
    n_out = len(c[0][0]) if c and c[0] else 0
    out = [Fraction(0)] * n_out
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            for k in range(n_out):
                out[k] += xi * yj * c[i][j][k]
    return out


def action(act, x):
    """Matrix sum_i x_i act[i]."""
    m = len(act[0]) if act else 0
    out = [[Fraction(0)] * m for _ in range(m)]
    for i, xi in enumerate(x):
        for u in range(m):
            for v in range(m):
                out[u][v] += xi * act[i][u][v]
    return out


# -- algebras ----------------------------------------------------------------------


def associator(c, M, x, y, z):
    return sub(product(c, product(c, x, y), apply(M, z)), product(c, apply(M, x), product(c, y, z)))


def is_multiplicative(c, M):
    n = len(M)
    for i, j in itertools.product(range(n), repeat=2):
        x, y = basis(n, i), basis(n, j)
        if apply(M, product(c, x, y)) != product(c, apply(M, x), apply(M, y)):
            return False
    return True


def is_hom_csa(c, M):
    n = len(M)
    if not is_multiplicative(c, M):
        return False
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        if associator(c, M, x, y, z) != associator(c, M, z, y, x):
            return False
    return True


def is_center_symmetric_untwisted(c):
    """``(xy)z - x(yz) = (zy)x - z(yx)`` with no twist anywhere."""
    n = len(c)
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        lhs = sub(product(c, product(c, x, y), z), product(c, x, product(c, y, z)))
        rhs = sub(product(c, product(c, z, y), x), product(c, z, product(c, y, x)))
        if lhs != rhs:
            return False
    return True


def is_hom_lie(b, M):
    n = len(M)
    for i, j in itertools.product(range(n), repeat=2):
        if product(b, basis(n, i), basis(n, j)) != scale(-1, product(b, basis(n, j), basis(n, i))):
            return False
    if not is_multiplicative(b, M):
        return False
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        total = add(
            product(b, apply(M, x), product(b, y, z)),
            product(b, apply(M, y), product(b, z, x)),
            product(b, apply(M, z), product(b, x, y)),
        )
        if any(total):
            return False
    return True


def commutator(c):
    n = len(c)
    return [[[c[i][j][k] - c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]


# -- modules -----------------------------------------------------------------------


def is_hom_lie_rep(b, M, rho, psi):
    """Both representation identities, evaluated on basis vectors."""
    n, m = len(M), len(psi)
    for i in range(n):
        x = basis(n, i)
        for q in range(m):
            v = basis(m, q)
            if apply(action(rho, apply(M, x)), apply(psi, v)) != apply(psi, apply(action(rho, x), v)):
                return False
    for i, j in itertools.product(range(n), repeat=2):
        x, y = basis(n, i), basis(n, j)
        for q in range(m):
            v = basis(m, q)
            lhs = apply(action(rho, product(b, x, y)), apply(psi, v))
            rhs = sub(
                apply(action(rho, apply(M, x)), apply(action(rho, y), v)),
                apply(action(rho, apply(M, y)), apply(action(rho, x), v)),
            )
            if lhs != rhs:
                return False
    return True


def is_bimodule(c, M, l, r, phi):
    """Only the three module identity families, no condition on the base."""
    n, m = len(M), len(phi)
    L = lambda x: action(l, x)  # noqa: E731
    R = lambda x: action(r, x)  # noqa: E731
    for i in range(n):
        x = basis(n, i)
        for q in range(m):
            v = basis(m, q)
            if apply(phi, apply(L(x), v)) != apply(L(apply(M, x)), apply(phi, v)):
                return False
            if apply(phi, apply(R(x), v)) != apply(R(apply(M, x)), apply(phi, v)):
                return False
    for i, j in itertools.product(range(n), repeat=2):
        x, y = basis(n, i), basis(n, j)
        ax, ay = apply(M, x), apply(M, y)
        for q in range(m):
            v = basis(m, q)
            pv = apply(phi, v)
            lhs = sub(apply(L(ax), apply(L(y), v)), apply(L(product(c, x, y)), pv))
            rhs = sub(apply(R(product(c, y, x)), pv), apply(R(ax), apply(R(y), v)))
            if lhs != rhs:
                return False
            lhs = sub(apply(L(ax), apply(R(y), v)), apply(R(ay), apply(L(x), v)))
            rhs = sub(apply(L(ay), apply(R(x), v)), apply(R(ax), apply(L(y), v)))
            if lhs != rhs:
                return False
    return True


def split(v, n):
    return v[:n], v[n:]


def semidirect_product(c, l, r, n, u, w):
    """``(x+a)(y+b) = xy + l(x)b + r(y)a`` on block vectors."""
    x, a = split(u, n)
    y, b = split(w, n)
    return product(c, x, y) + add(apply(action(l, x), b), apply(action(r, y), a))


def structure_of(mul, dim):
    """Structure constants of a bilinear map given as a Python function."""
    return [[mul(basis(dim, i), basis(dim, j)) for j in range(dim)] for i in range(dim)]


def block_diag(P, Q):
    a, b = len(P), len(Q)
    out = [[Fraction(0)] * (a + b) for _ in range(a + b)]
    for i in range(a):
        for j in range(a):
            out[i][j] = P[i][j]
    for i in range(b):
        for j in range(b):
            out[a + i][a + j] = Q[i][j]
    return out


def bicross(cA, cB, lA, rA, lB, rB, n, u, w):
    """``(x+a)(y+b) = (xy + l_B(a)y + r_B(b)x) + (ab + l_A(x)b + r_A(y)a)``."""
    x, a = split(u, n)
    y, b = split(w, n)
    first = add(product(cA, x, y), apply(action(lB, a), y), apply(action(rB, b), x))
    second = add(product(cB, a, b), apply(action(lA, x), b), apply(action(rA, y), a))
    return first + second


def lie_double(bG, bH, rhoG, rhoH, n, u, w):
    """``[x+a, y+b] = [x,y] + rhoH(a)y - rhoH(b)x + [a,b] + rhoG(x)b - rhoG(y)a``."""
    x, a = split(u, n)
    y, b = split(w, n)
    first = sub(add(product(bG, x, y), apply(action(rhoH, a), y)), apply(action(rhoH, b), x))
    second = sub(add(product(bH, a, b), apply(action(rhoG, x), b)), apply(action(rhoG, y), a))
    return first + second


# -- pairings and the double ---------------------------------------------------------


def pair(x, a):
    return sum((p * q for p, q in zip(x, a)), Fraction(0))


def manin_product(c, f, n, u, w):
    """Product on ``A + A*`` defined through the pairing only:

    ``<R*_x b, v> = <b, v x>``, ``<L*_y a, v> = <a, y v>``,
    ``<R_o*(a) y, w> = <y, w o a>``, ``<L_o*(b) x, w> = <x, b o w>``.
    """
    x, a = split(u, n)
    y, b = split(w, n)
    E = [basis(n, i) for i in range(n)]
    r_dot = lambda xx, bb: [pair(product(c, e, xx), bb) for e in E]  # noqa: E731
    l_dot = lambda yy, aa: [pair(product(c, yy, e), aa) for e in E]  # noqa: E731
    r_circ = lambda aa, yy: [pair(yy, product(f, e, aa)) for e in E]  # noqa: E731
    l_circ = lambda bb, xx: [pair(xx, product(f, bb, e)) for e in E]  # noqa: E731
    first = add(product(c, x, y), r_circ(a, y), l_circ(b, x))
    second = add(product(f, a, b), r_dot(x, b), l_dot(y, a))
    return first + second


def standard_form(u, w, n):
    x, a = split(u, n)
    y, b = split(w, n)
    return pair(x, b) + pair(y, a)


# -- cocycles ----------------------------------------------------------------------


def tensor_of(delta_cols, k):
    """``delta(e_k)`` as an n x n matrix ``T[p][q]`` (coefficient of e_p (x) e_q)."""
    return [[delta_cols[p][q][k] for q in range(len(delta_cols))] for p in range(len(delta_cols))]


def cocycle_holds(b, M, delta):
    """``delta(alpha[x, y]) = rho(x) delta(y) - rho(y) delta(x)`` with
    ``rho(x) T = -(ad_x T alpha^T + alpha T ad_x^T)`` in matrix form.

    ``b`` is a bracket, ``delta[p][q][k]`` the coefficient of ``e_p (x) e_q`` in
    ``delta(e_k)``.
    """
    n = len(M)

    def delta_of(v):
        out = [[Fraction(0)] * n for _ in range(n)]
        for k, vk in enumerate(v):
            T = tensor_of(delta, k)
            for p in range(n):
                for q in range(n):
                    out[p][q] += vk * T[p][q]
        return out

    def ad(x):
        return [[product(b, x, basis(n, w))[u] for w in range(n)] for u in range(n)]

    def rho(x, T):
        A = ad(x)
        first = matmul(matmul(A, T), transpose(M))
        second = matmul(matmul(M, T), transpose(A))
        return [[-(first[p][q] + second[p][q]) for q in range(n)] for p in range(n)]

    for i, j in itertools.product(range(n), repeat=2):
        x, y = basis(n, i), basis(n, j)
        lhs = delta_of(apply(M, product(b, x, y)))
        r1, r2 = rho(x, delta_of(y)), rho(y, delta_of(x))
        rhs = [[r1[p][q] - r2[p][q] for q in range(n)] for p in range(n)]
        if lhs != rhs:
            return False
    return True


def kron(F, G):
    a, b = len(F), len(F[0]) if F else 0
    c, d = len(G), len(G[0]) if G else 0
    out = [[Fraction(0)] * (b * d) for _ in range(a * c)]
    for i in range(a):
        for p in range(c):
            for j in range(b):
                for q in range(d):
                    out[i * c + p][j * d + q] = F[i][j] * G[p][q]
    return out
