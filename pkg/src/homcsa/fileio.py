"""JSON file formats for algebras and the structures built on them.

Every file holds one JSON object.  Rationals are strings ``"p"`` or
``"p/q"`` (bare JSON integers are accepted on input); indices are 0-based.
The structure kind is recognised from the key set:

=================  ==================================================
algebra            ``dim, mul, alpha`` and optional ``name``
bimodule           ``base, mod_dim, l, r, phi``
representation     ``base, mod_dim, rho, psi``
matched-pair       ``A, B, lA, rA, lB, rB``
lie-matched-pair   ``G, H, rhoG, rhoH``
paired             ``primal, dual_mul`` (the dual twist is implied)
=================  ==================================================

``alpha[i][j]`` is the coefficient of ``e_i`` in ``alpha(e_j)`` and
``mul[i][j][k]`` the coefficient of ``e_k`` in ``e_i e_j``.  Action tensors
are stored as ``act[i][row][col]``.  Serialization is canonical: sorted
keys, reduced fractions, compact separators.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .bialg import PairedAlgebras
from .exactlin import InputError, as_text, scalar
from .homcore import HomAlgebra
from .matched import MatchedPairCSA, MatchedPairHomLie
from .repmod import Bimodule, Representation

KINDS = {
    "algebra": frozenset({"dim", "mul", "alpha"}),
    "bimodule": frozenset({"base", "mod_dim", "l", "r", "phi"}),
    "representation": frozenset({"base", "mod_dim", "rho", "psi"}),
    "matched-pair": frozenset({"A", "B", "lA", "rA", "lB", "rB"}),
    "lie-matched-pair": frozenset({"G", "H", "rhoG", "rhoH"}),
    "paired": frozenset({"primal", "dual_mul"}),
}
_OPTIONAL = {"algebra": frozenset({"name"})}


# -- decoding --------------------------------------------------------------------


def _tensor(data, shape: tuple, where: str) -> np.ndarray:
    """Read a nested list of rationals of exactly ``shape``."""
    out = np.empty(shape, dtype=object)

    def walk(node, depth: int, idx: tuple, path: str):
        if depth == len(shape):
            if isinstance(node, bool) or not isinstance(node, (str, int)):
                raise InputError(f"{path}: expected a rational string, got {node!r}")
            try:
                out[idx] = scalar(node)
            except InputError as exc:
                raise InputError(f"{path}: {exc}") from None
            return
        if not isinstance(node, list):
            raise InputError(f"{path}: expected a list of length {shape[depth]}")
        if len(node) != shape[depth]:
            raise InputError(f"{path}: expected length {shape[depth]}, got {len(node)}")
        for i, child in enumerate(node):
            walk(child, depth + 1, idx + (i,), f"{path}[{i}]")

    walk(data, 0, (), where)
    out.flags.writeable = False
    return out


def _count(obj: dict, key: str, where: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InputError(f"{where}.{key}: expected a non-negative integer, got {v!r}")
    return v


def _keys(obj, kind: str, where: str) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    need = KINDS[kind]
    allowed = need | _OPTIONAL.get(kind, frozenset())
    missing = sorted(need - obj.keys())
    extra = sorted(obj.keys() - allowed)
    if missing:
        raise InputError(f"{where}: missing field(s) {', '.join(missing)}")
    if extra:
        raise InputError(f"{where}: unknown field(s) {', '.join(extra)}")


def detect_kind(obj: Any) -> str:
    if isinstance(obj, dict):
        keys = obj.keys() - {"name"}
        for kind, need in KINDS.items():
            if keys == need:
                return kind
    raise InputError("unrecognised structure: key set matches no known file kind")


def algebra_from_obj(obj, where: str = "$") -> HomAlgebra:
    _keys(obj, "algebra", where)
    n = _count(obj, "dim", where)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{where}.name: expected a string")
    mul = _tensor(obj["mul"], (n, n, n), f"{where}.mul")
    alpha = _tensor(obj["alpha"], (n, n), f"{where}.alpha")
    return HomAlgebra(mul, alpha, name=name)


def _module(obj, kind: str, where: str):
    _keys(obj, kind, where)
    base = algebra_from_obj(obj["base"], f"{where}.base")
    n, m = base.dim, _count(obj, "mod_dim", where)
    return base, n, m


def bimodule_from_obj(obj, where: str = "$") -> Bimodule:
    base, n, m = _module(obj, "bimodule", where)
    return Bimodule(
        base,
        _tensor(obj["l"], (n, m, m), f"{where}.l"),
        _tensor(obj["r"], (n, m, m), f"{where}.r"),
        _tensor(obj["phi"], (m, m), f"{where}.phi"),
    )


def representation_from_obj(obj, where: str = "$") -> Representation:
    base, n, m = _module(obj, "representation", where)
    return Representation(
        base,
        _tensor(obj["rho"], (n, m, m), f"{where}.rho"),
        _tensor(obj["psi"], (m, m), f"{where}.psi"),
    )


def matched_pair_from_obj(obj, where: str = "$") -> MatchedPairCSA:
    _keys(obj, "matched-pair", where)
    A = algebra_from_obj(obj["A"], f"{where}.A")
    B = algebra_from_obj(obj["B"], f"{where}.B")
    n, m = A.dim, B.dim
    return MatchedPairCSA(
        A,
        B,
        _tensor(obj["lA"], (n, m, m), f"{where}.lA"),
        _tensor(obj["rA"], (n, m, m), f"{where}.rA"),
        _tensor(obj["lB"], (m, n, n), f"{where}.lB"),
        _tensor(obj["rB"], (m, n, n), f"{where}.rB"),
    )


def lie_matched_pair_from_obj(obj, where: str = "$") -> MatchedPairHomLie:
    _keys(obj, "lie-matched-pair", where)
    G = algebra_from_obj(obj["G"], f"{where}.G")
    H = algebra_from_obj(obj["H"], f"{where}.H")
    n, m = G.dim, H.dim
    return MatchedPairHomLie(
        G,
        H,
        _tensor(obj["rhoG"], (n, m, m), f"{where}.rhoG"),
        _tensor(obj["rhoH"], (m, n, n), f"{where}.rhoH"),
    )


def paired_from_obj(obj, where: str = "$") -> PairedAlgebras:
    _keys(obj, "paired", where)
    primal = algebra_from_obj(obj["primal"], f"{where}.primal")
    n = primal.dim
    return PairedAlgebras(primal, _tensor(obj["dual_mul"], (n, n, n), f"{where}.dual_mul"))


_DECODERS = {
    "algebra": algebra_from_obj,
    "bimodule": bimodule_from_obj,
    "representation": representation_from_obj,
    "matched-pair": matched_pair_from_obj,
    "lie-matched-pair": lie_matched_pair_from_obj,
    "paired": paired_from_obj,
}


def load_json(text) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"not UTF-8: byte {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_structure(text, kind: str | None = None):
    """Parse any supported file.  With ``kind`` given, the content must match it."""
    obj = load_json(text)
    found = detect_kind(obj) if kind is None else kind
    if kind is not None and kind not in _DECODERS:
        raise InputError(f"unknown kind {kind!r}")
    return _DECODERS[found](obj)


def parse_algebra(text) -> HomAlgebra:
    return parse_structure(text, "algebra")


# -- encoding --------------------------------------------------------------------


def _nested(arr: np.ndarray) -> list:
    def text(node):
        return [text(x) for x in node] if isinstance(node, list) else as_text(node)

    return text(np.asarray(arr, dtype=object).tolist())


def to_obj(x) -> dict:
    if isinstance(x, HomAlgebra):
        obj = {"dim": x.dim, "mul": _nested(x.mul), "alpha": _nested(x.twist)}
        if x.name is not None:
            obj["name"] = x.name
        return obj
    if isinstance(x, Bimodule):
        return {
            "base": to_obj(x.base),
            "mod_dim": x.mod_dim,
            "l": _nested(x.l),
            "r": _nested(x.r),
            "phi": _nested(x.phi),
        }
    if isinstance(x, Representation):
        return {
            "base": to_obj(x.base),
            "mod_dim": x.mod_dim,
            "rho": _nested(x.rho),
            "psi": _nested(x.psi),
        }
    if isinstance(x, MatchedPairCSA):
        return {
            "A": to_obj(x.A),
            "B": to_obj(x.B),
            **{k: _nested(getattr(x, k)) for k in ("lA", "rA", "lB", "rB")},
        }
    if isinstance(x, MatchedPairHomLie):
        return {
            "G": to_obj(x.G),
            "H": to_obj(x.H),
            "rhoG": _nested(x.rhoG),
            "rhoH": _nested(x.rhoH),
        }
    if isinstance(x, PairedAlgebras):
        return {"primal": to_obj(x.primal), "dual_mul": _nested(x.dual_mul)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def serialize(x) -> str:
    """Canonical one-line JSON text (no trailing newline)."""
    return json.dumps(to_obj(x), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize_algebra(A: HomAlgebra) -> str:
    return serialize(A)


def kind_of(x) -> str:
    for kind, cls in (
        ("algebra", HomAlgebra),
        ("bimodule", Bimodule),
        ("representation", Representation),
        ("matched-pair", MatchedPairCSA),
        ("lie-matched-pair", MatchedPairHomLie),
        ("paired", PairedAlgebras),
    ):
        if isinstance(x, cls):
            return kind
    raise TypeError(f"no file kind for {type(x).__name__}")
