"""Instance search over structure constants drawn from a finite coefficient set.

Candidates are tuples of twist entries (row-major) followed by product
entries ``c[i][j][k]`` in index order, and for the bialgebra target the
dual product entries ``f[i][j][k]`` last.  Exhaustive mode walks them in
lexicographic order of the coefficient positions in the (sorted) set;
random mode draws them from ``random.Random(seed)`` and keeps draw order.

A vectorized integer prefilter evaluates the axioms on whole batches
(entries are scaled by a common denominator so every identity stays
integral).  Each prefilter passer is then re-checked with the exact
checkers before it is emitted.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .bialg import PairedAlgebras, check_bialgebra
from .exactlin import InputError, Scalar, rational_array, scalar
from .homcore import HomAlgebra, check_center_symmetric, check_hom_jacobi

TARGETS = ("hom-csa", "hom-lie", "bialgebra")
DEFAULT_BUDGET = 10**8
DEFAULT_SET = (-1, 0, 1)
_CHUNK = 1 << 15


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    coefficients: tuple = DEFAULT_SET
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    target: str = "hom-csa"
    budget: int = DEFAULT_BUDGET
    twist: tuple | None = None  # optional fixed twist, row-major

    def __post_init__(self):
        if self.dim < 0:
            raise InputError("dim must be non-negative")
        coeffs = tuple(sorted({scalar(x) for x in self.coefficients}))
        if not coeffs:
            raise InputError("coefficient set is empty")
        object.__setattr__(self, "coefficients", coeffs)
        if self.mode not in ("exhaustive", "random"):
            raise InputError(f"mode must be exhaustive or random, got {self.mode!r}")
        if self.target not in TARGETS:
            raise InputError(f"target must be one of {', '.join(TARGETS)}")
        if self.samples < 0:
            raise InputError("samples must be non-negative")
        if self.twist is not None:
            tw = tuple(scalar(x) for x in self.twist)
            if len(tw) != self.dim * self.dim:
                raise InputError(f"twist needs {self.dim * self.dim} entries, got {len(tw)}")
            object.__setattr__(self, "twist", tw)

    @property
    def free_entries(self) -> int:
        """Number of entries drawn from the coefficient set per candidate."""
        n = self.dim
        products = 2 if self.target == "bialgebra" else 1
        return products * n**3 + (0 if self.twist is not None else n * n)

    @property
    def candidate_count(self) -> int:
        return len(self.coefficients) ** self.free_entries


@dataclass(frozen=True)
class Found:
    index: int  # position in enumeration (exhaustive) or draw number (random)
    instance: object  # HomAlgebra or PairedAlgebras


def parse_coefficients(text: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("coefficient set is empty")
    return tuple(scalar(p) for p in parts)


# -- integer batches ---------------------------------------------------------------


class _Scaled:
    """Coefficient set as integers over a common denominator ``L``."""

    def __init__(self, coeffs: Sequence[Scalar], n: int):
        self.L = math.lcm(*[Fraction(x).denominator for x in coeffs])
        self.ints = [int(Fraction(x) * self.L) for x in coeffs]
        bound = max(abs(v) for v in self.ints) or 1
        # largest term: a triple product summed over at most n^4 index tuples,
        # times the scale factor and a small constant
        worst = 8 * self.L * max(n, 1) ** 4 * bound**3
        self.dtype = np.int64 if worst < 2**62 else object

    def lift(self, values) -> np.ndarray:
        return np.array([int(Fraction(v) * self.L) for v in values], dtype=self.dtype)


def _digits(indices: np.ndarray, base: int, width: int) -> np.ndarray:
    """Mixed-radix digits (most significant first) of each index."""
    out = np.empty((len(indices), width), dtype=np.int64)
    rem = indices.copy()
    for pos in range(width - 1, -1, -1):
        out[:, pos] = rem % base
        rem //= base
    return out


def _csa_mask(C: np.ndarray, D: np.ndarray, L: int) -> np.ndarray:
    """Batch hom-CSA test.  ``C`` is ``(B, n, n, n)``, ``D`` is ``(B, n, n)``."""
    lhs = L * np.einsum("bijk,blk->bijl", C, D)
    rhs = np.einsum("bpi,bqj,bpql->bijl", D, D, C)
    ok = np.all((lhs == rhs).reshape(len(C), -1), axis=1)
    T = np.einsum("bijs,btk,bstl->bijkl", C, D, C) - np.einsum("bsi,bjkt,bstl->bijkl", D, C, C)
    sym = np.all((T == T.transpose(0, 3, 2, 1, 4)).reshape(len(C), -1), axis=1)
    return ok & sym


def _lie_mask(C: np.ndarray, D: np.ndarray, L: int) -> np.ndarray:
    B = len(C)
    skew = np.all((C == -C.transpose(0, 2, 1, 3)).reshape(B, -1), axis=1)
    lhs = L * np.einsum("bijk,blk->bijl", C, D)
    rhs = np.einsum("bpi,bqj,bpql->bijl", D, D, C)
    mult = np.all((lhs == rhs).reshape(B, -1), axis=1)
    T = np.einsum("bsi,bjkt,bstl->bijkl", D, C, C)
    J = T + T.transpose(0, 3, 1, 2, 4) + T.transpose(0, 2, 3, 1, 4)
    jac = np.all((J == 0).reshape(B, -1), axis=1)
    return skew & mult & jac


def _cocycle_mask(C: np.ndarray, D: np.ndarray, F: np.ndarray) -> np.ndarray:
    """Batch cocycle test for ``delta = F`` against the bracket of ``(C, D)``.

    Both sides are homogeneous of degree three in the scaled entries.
    """
    B, n = C.shape[0], C.shape[1]
    br = C - C.transpose(0, 2, 1, 3)
    twisted = np.einsum("blk,bijk->bijl", D, br)
    lhs = np.einsum("bpql,bijl->bijpq", F, twisted)
    # rho(e_i) delta(e_j) with rho = -(ad (x) alpha + alpha (x) ad);
    # ad[i][u, w] = br[i, w, u]
    t1 = np.einsum("biwu,bvz,bwzj->bijuv", br, D, F)
    t2 = np.einsum("buw,bizv,bwzj->bijuv", D, br, F)
    act = -(t1 + t2)
    rhs = act - act.transpose(0, 2, 1, 3, 4)
    return np.all((lhs == rhs).reshape(B, -1), axis=1)


# -- enumeration -------------------------------------------------------------------


def _check_exact(cfg: SearchConfig, inst) -> bool:
    if cfg.target == "hom-csa":
        return check_center_symmetric(inst).passed
    if cfg.target == "hom-lie":
        return check_hom_jacobi(inst).passed
    return check_bialgebra(inst).passed


def _build(cfg: SearchConfig, row: Sequence, index: int):
    n = cfg.dim
    pos = 0
    if cfg.twist is None:
        tw = row[: n * n]
        pos = n * n
    else:
        tw = cfg.twist
    twist = rational_array(list(tw)).reshape(n, n) if n else rational_array([]).reshape(0, 0)
    mul = rational_array(list(row[pos : pos + n**3])).reshape(n, n, n)
    name = f"{cfg.target}:{index}"
    if cfg.target != "bialgebra":
        return HomAlgebra(mul, twist, name=name)
    f = rational_array(list(row[pos + n**3 :])).reshape(n, n, n)
    return PairedAlgebras(HomAlgebra(mul, twist, name=name), f)


def _mask(cfg: SearchConfig, sc: _Scaled, rows: np.ndarray) -> np.ndarray:
    """Prefilter over integer rows laid out like candidate tuples."""
    n = cfg.dim
    B = len(rows)
    if n == 0:
        return np.ones(B, dtype=bool)
    if cfg.twist is None:
        D = rows[:, : n * n].reshape(B, n, n)
        pos = n * n
    else:
        D = np.broadcast_to(sc.lift(cfg.twist).reshape(1, n, n), (B, n, n))
        pos = 0
    C = rows[:, pos : pos + n**3].reshape(B, n, n, n)
    if cfg.target == "hom-csa":
        return _csa_mask(C, D, sc.L)
    if cfg.target == "hom-lie":
        return _lie_mask(C, D, sc.L)
    F = rows[:, pos + n**3 :].reshape(B, n, n, n)
    Dt = D.transpose(0, 2, 1)
    ok = _csa_mask(C, D, sc.L) & _csa_mask(F, Dt, sc.L)
    idx = np.nonzero(ok)[0]
    if len(idx):
        sub = _cocycle_mask(C[idx], D[idx], F[idx]) & _cocycle_mask(F[idx], Dt[idx], C[idx])
        ok[idx] = sub
    return ok


def _emit(cfg: SearchConfig, sc: _Scaled, digits: np.ndarray, start_index) -> Iterator[Found]:
    lifted = np.array(sc.ints, dtype=sc.dtype)[digits]
    keep = _mask(cfg, sc, lifted)
    for r in np.nonzero(keep)[0]:
        row = [cfg.coefficients[d] for d in digits[r]]
        index = int(start_index[r])
        inst = _build(cfg, row, index)
        if _check_exact(cfg, inst):
            yield Found(index, inst)


def _exhaustive(cfg: SearchConfig) -> Iterator[Found]:
    k = len(cfg.coefficients)
    width = cfg.free_entries
    total = cfg.candidate_count
    sc = _Scaled(cfg.coefficients, cfg.dim)
    if cfg.target == "bialgebra" and width:
        yield from _exhaustive_pairs(cfg, sc)
        return
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield from _emit(cfg, sc, _digits(idx, k, width), idx)


def _exhaustive_pairs(cfg: SearchConfig, sc: _Scaled) -> Iterator[Found]:
    """Bialgebra enumeration: a candidate needs both halves hom-CSA, so the
    hom-CSA passers for each twist are found first and only those pairs are
    examined.  Output order is the same as a plain lexicographic walk."""
    n = cfg.dim
    k = len(cfg.coefficients)
    n3 = n**3
    twists = [cfg.twist] if cfg.twist is not None else list(
        itertools.product(range(k), repeat=n * n)
    )
    csa_cache: dict[tuple, list[int]] = {}

    def passers(tw_vals: tuple) -> list[int]:
        if tw_vals not in csa_cache:
            sub = SearchConfig(
                n, cfg.coefficients, target="hom-csa", budget=cfg.budget, twist=tw_vals
            )
            found = []
            for start in range(0, k**n3, _CHUNK):
                idx = np.arange(start, min(start + _CHUNK, k**n3), dtype=np.int64)
                dig = _digits(idx, k, n3)
                mask = _mask(sub, sc, np.array(sc.ints, dtype=sc.dtype)[dig])
                found.extend(int(i) for i in idx[mask])
            csa_cache[tw_vals] = found
        return csa_cache[tw_vals]

    for t_digits in twists:
        if cfg.twist is None:
            tw_vals = tuple(cfg.coefficients[d] for d in t_digits)
            t_index = int(np.dot(t_digits, [k**p for p in range(n * n - 1, -1, -1)]))
        else:
            tw_vals, t_index = cfg.twist, 0
        Mt = np.array(tw_vals, dtype=object).reshape(n, n).T
        left = passers(tw_vals)
        right = passers(tuple(Mt.ravel()))
        if not left or not right:
            continue
        pairs = [(a, b) for a in left for b in right]
        for start in range(0, len(pairs), _CHUNK):
            chunk = np.array(pairs[start : start + _CHUNK], dtype=np.int64)
            cd = _digits(chunk[:, 0], k, n3)
            fd = _digits(chunk[:, 1], k, n3)
            parts = [cd, fd]
            if cfg.twist is None:
                parts.insert(0, np.broadcast_to(np.array(t_digits), (len(chunk), n * n)))
            digits = np.concatenate(parts, axis=1)
            K = k**n3
            index = [(t_index * K + a) * K + b for a, b in pairs[start : start + _CHUNK]]
            yield from _emit(cfg, sc, digits, index)


def _random(cfg: SearchConfig) -> Iterator[Found]:
    rng = random.Random(cfg.seed)
    k = len(cfg.coefficients)
    width = cfg.free_entries
    sc = _Scaled(cfg.coefficients, cfg.dim)
    drawn = 0
    while drawn < cfg.samples:
        size = min(_CHUNK, cfg.samples - drawn)
        digits = np.array(
            [[rng.randrange(k) for _ in range(width)] for _ in range(size)], dtype=np.int64
        ).reshape(size, width)
        yield from _emit(cfg, sc, digits, np.arange(drawn, drawn + size))
        drawn += size


def search(cfg: SearchConfig) -> Iterator[Found]:
    """Stream passing instances; raises before any work if over budget."""
    if cfg.mode == "exhaustive" and cfg.candidate_count > cfg.budget:
        raise InputError(
            f"exhaustive search over {cfg.candidate_count} candidates exceeds the budget "
            f"of {cfg.budget}; narrow the set, fix the twist, or use random mode"
        )
    if cfg.mode == "exhaustive":
        return _exhaustive(cfg)
    return _random(cfg)


def count_passers(cfg: SearchConfig) -> int:
    return sum(1 for _ in search(cfg))
