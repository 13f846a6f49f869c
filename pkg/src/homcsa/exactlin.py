"""Exact rational matrices and rank-3 tensors.

Everything here is a numpy ``object`` array whose entries are exact
rationals: Python ``int`` for integral values and ``fractions.Fraction``
otherwise.  Floats are rejected at the boundary.

Conventions used throughout the package:

* A linear map is an ``(rows, cols)`` array acting on column vectors, so
  ``M[i, j]`` is the coefficient of output basis vector ``i`` in the image
  of input basis vector ``j``.
* A bilinear tensor ``c`` has shape ``(n_left, n_right, n_out)`` and
  ``c[i, j, k]`` is the coefficient of ``e_k`` in ``e_i * e_j``.
* An action tensor has shape ``(alg_dim, mod_dim, mod_dim)``; member ``i``
  is the matrix by which basis element ``e_i`` acts.
* Tensor-product bases are ordered lexicographically, left factor major.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Union

import numpy as np

Scalar = Union[int, Fraction]


class InputError(ValueError):
    """Malformed or shape-inconsistent input."""


def scalar(value) -> Scalar:
    """Convert ``value`` to a canonical exact rational.

    Accepts ints, Fractions, other exact rationals and strings of the form
    ``"p"`` or ``"p/q"``.  Integral results come back as ``int``.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise InputError(f"not a rational: {value!r}") from None
        if q == 0:
            raise InputError(f"zero denominator: {value!r}")
        value = Fraction(p, q)
    elif isinstance(value, numbers.Rational):
        value = Fraction(value.numerator, value.denominator)
    elif isinstance(value, np.integer):
        return int(value)
    else:
        raise InputError(f"not an exact rational: {value!r}")
    if value.denominator == 1:
        return value.numerator
    return value


def rational_array(data, shape=None) -> np.ndarray:
    """Build a read-only object array of canonical rationals."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        shape = tuple(shape)
        if arr.size == 0 and 0 in shape:
            arr = np.empty(shape, dtype=object)
        if arr.shape != shape:
            raise InputError(f"expected shape {shape}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = scalar(arr[idx])
    out.flags.writeable = False
    return out


def zeros(shape) -> np.ndarray:
    out = np.zeros(shape, dtype=int).astype(object)
    out.flags.writeable = False
    return out


def identity(n: int) -> np.ndarray:
    out = np.identity(n, dtype=int).astype(object)
    out.flags.writeable = False
    return out


def frozen(arr: np.ndarray) -> np.ndarray:
    """Return ``arr`` as a read-only object array with canonical entries."""
    arr = np.asarray(arr, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        x = arr[idx]
        if isinstance(x, Fraction) and x.denominator == 1:
            x = x.numerator
        out[idx] = x
    out.flags.writeable = False
    return out


def _require_matrix(f: np.ndarray, name: str) -> None:
    if np.ndim(f) != 2:
        raise InputError(f"{name} must be a matrix, got shape {np.shape(f)}")


def mat_compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Return ``f o g``."""
    _require_matrix(f, "f")
    _require_matrix(g, "g")
    if f.shape[1] != g.shape[0]:
        raise InputError(f"cannot compose {f.shape} with {g.shape}")
    if f.shape[1] == 0:
        return zeros((f.shape[0], g.shape[1]))
    return frozen(np.dot(f, g))


def mat_apply(f: np.ndarray, v) -> np.ndarray:
    _require_matrix(f, "f")
    v = np.asarray(v, dtype=object)
    if v.shape != (f.shape[1],):
        raise InputError(f"vector of length {v.shape} does not fit {f.shape}")
    if f.shape[1] == 0:
        return zeros((f.shape[0],))
    return frozen(np.dot(f, v))


def kron(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Kronecker product on the left-major tensor basis.

    ``kron(f, g)[(i, p), (j, q)] = f[i, j] * g[p, q]`` with the pair
    ``(i, p)`` flattened to ``i * g.rows + p``.
    """
    _require_matrix(f, "f")
    _require_matrix(g, "g")
    (a, b), (c, d) = f.shape, g.shape
    if f.size and g.size:
        out = np.einsum("ij,pq->ipjq", f, g)
    else:
        out = np.zeros((a, c, b, d), dtype=int).astype(object)
    return frozen(out.reshape(a * c, b * d))


def tensor_swap(n: int) -> np.ndarray:
    """Permutation matrix of the exchange map ``e_i (x) e_j -> e_j (x) e_i``."""
    if n < 0:
        raise InputError("n must be non-negative")
    out = np.zeros((n * n, n * n), dtype=int).astype(object)
    for i in range(n):
        for j in range(n):
            out[j * n + i, i * n + j] = 1
    out.flags.writeable = False
    return out


def dual_map(f: np.ndarray) -> np.ndarray:
    """Dual of ``f`` under the standard pairing ``<e_i, e_j*> = delta_ij``.

    With dual bases identified with primal ones this is the transpose.
    """
    _require_matrix(f, "f")
    return frozen(f.T)


def bilinear_apply(t: np.ndarray, x, y) -> np.ndarray:
    """``out[k] = sum_ij x[i] y[j] t[i, j, k]``."""
    if np.ndim(t) != 3:
        raise InputError(f"bilinear tensor must be rank 3, got shape {np.shape(t)}")
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    if x.shape != (t.shape[0],) or y.shape != (t.shape[1],):
        raise InputError(
            f"vectors of lengths {x.shape}, {y.shape} do not fit tensor {t.shape}"
        )
    out = [0] * t.shape[2]
    for i in range(t.shape[0]):
        if x[i] == 0:
            continue
        for j in range(t.shape[1]):
            if y[j] == 0:
                continue
            w = x[i] * y[j]
            for k in range(t.shape[2]):
                out[k] += w * t[i, j, k]
    return frozen(np.array(out, dtype=object))


def action_at(act: np.ndarray, x) -> np.ndarray:
    """Matrix of the action of ``sum_i x[i] e_i``: ``sum_i x[i] act[i]``."""
    x = np.asarray(x, dtype=object)
    if x.shape != (act.shape[0],):
        raise InputError(f"vector of length {x.shape} does not fit action {act.shape}")
    out = np.zeros(act.shape[1:], dtype=int).astype(object)
    for i, xi in enumerate(x):
        if xi != 0:
            out = out + xi * act[i]
    return frozen(out)


def unit(n: int, i: int) -> np.ndarray:
    out = np.zeros(n, dtype=int).astype(object)
    out[i] = 1
    out.flags.writeable = False
    return out


def block_diag(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    (a, b), (c, d) = f.shape, g.shape
    out = np.zeros((a + c, b + d), dtype=int).astype(object)
    out[:a, :b] = f
    out[a:, b:] = g
    return frozen(out)


def as_text(x) -> str:
    """Canonical string form of a rational: ``"p"`` or ``"p/q"``."""
    return str(Fraction(x))
