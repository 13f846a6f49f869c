"""Command-line interface: ``check``, ``derive`` and ``search``.

Exit codes: 0 when every check passed, 1 when some axiom failed, 2 when
the input could not be used and no check was run.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Callable, Sequence

from . import fileio
from .bialg import (
    check_bialgebra,
    check_manin_invariance,
    equivalence_report,
    standard_manin_algebra,
    standard_matched_pair,
)
from .exactlin import InputError, as_text
from .homcore import (
    AxiomReport,
    Violation,
    check_center_symmetric,
    check_hom_jacobi,
    commutator_algebra,
    make_report,
)
from .matched import (
    bicross_product,
    check_matched_pair_csa,
    check_matched_pair_hom_lie,
    induced_lie_matched_pair,
)
from .repmod import (
    bimodule_to_rep,
    check_bimodule,
    check_hom_lie_rep,
    dual_bimodule,
    regular_bimodule,
    semidirect_hom_csa,
    semidirect_hom_lie,
    tensor_product_rep,
)
from .search import DEFAULT_BUDGET, TARGETS, SearchConfig, parse_coefficients, search

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
MAX_TEXT_VIOLATIONS = 20


# -- checks ------------------------------------------------------------------------


_CONDITIONS = ("manin_triple", "matched_pair_csa", "matched_pair_hom_lie", "bialgebra")


def _equivalence(P) -> tuple[list[AxiomReport], dict]:
    """Four-way agreement as the verdict; per-condition reports are informational."""
    eq = equivalence_report(P)
    agreement = []
    if not eq.agree:
        agreement.append(
            Violation("four-way-agreement", (), tuple(int(c) for c in eq.conditions), ())
        )
    reports = [make_report("four-way-agreement", agreement)]
    reports += [AxiomReport(f"detail/{r.axiom}", r.violations) for r in eq.reports]
    summary = {
        "conditions": dict(zip(_CONDITIONS, eq.conditions)),
        "agree": eq.agree,
        "alpha_squared_identity": eq.alpha_squared_identity,
        "primal_hom_csa": eq.primal_hom_csa,
        "dual_hom_csa": eq.dual_hom_csa,
    }
    return reports, summary


CHECKS: dict[str, tuple[str, Callable]] = {
    "algebra": ("algebra", lambda A: [check_center_symmetric(A)]),
    "hom-lie": ("algebra", lambda A: [check_hom_jacobi(A)]),
    "representation": ("representation", lambda R: [check_hom_lie_rep(R)]),
    "bimodule": ("bimodule", lambda B: [check_bimodule(B)]),
    "matched-pair": ("matched-pair", lambda M: [check_matched_pair_csa(M)]),
    "lie-matched-pair": ("lie-matched-pair", lambda M: [check_matched_pair_hom_lie(M)]),
    "bialgebra": ("paired", lambda P: [check_bialgebra(P)]),
    "manin": ("paired", lambda P: [check_manin_invariance(P)]),
    "equivalence": ("paired", None),
}

# reports whose failure does not count against the verdict
_INFORMATIONAL = ("detail/",)


def _counts(report: AxiomReport) -> bool:
    return not report.axiom.startswith(_INFORMATIONAL)


# -- derivations -------------------------------------------------------------------


def _semidirect(x):
    if fileio.kind_of(x) == "bimodule":
        D = semidirect_hom_csa(x)
        return D, [check_center_symmetric(D)]
    D = semidirect_hom_lie(x)
    return D, [check_hom_jacobi(D)]


def _manin(P):
    D = standard_manin_algebra(P)
    return D, [check_center_symmetric(D), check_manin_invariance(P)]


def _one(fn, post):
    def run(items):
        (x,) = items
        out = fn(x)
        return out, post(out)

    return run


DERIVATIONS: dict[str, tuple[tuple, Callable]] = {
    "commutator": (("algebra",), _one(commutator_algebra, lambda A: [check_hom_jacobi(A)])),
    "regular-bimodule": (("algebra",), _one(regular_bimodule, lambda B: [check_bimodule(B)])),
    "dual-bimodule": (("bimodule",), _one(dual_bimodule, lambda B: [check_bimodule(B)])),
    "bimodule-rep": (("bimodule",), _one(bimodule_to_rep, lambda R: [check_hom_lie_rep(R)])),
    "semidirect": ((("bimodule", "representation"),), lambda items: _semidirect(items[0])),
    "bicross": (("matched-pair",), _one(bicross_product, lambda A: [check_center_symmetric(A)])),
    "manin-double": (("paired",), lambda items: _manin(items[0])),
    "standard-matched-pair": (
        ("paired",),
        _one(standard_matched_pair, lambda M: [check_matched_pair_csa(M)]),
    ),
    "tensor-rep": (
        ("representation", "representation"),
        lambda items: (lambda R: (R, [check_hom_lie_rep(R)]))(tensor_product_rep(*items)),
    ),
    "induced-lie-pair": (
        ("matched-pair",),
        _one(induced_lie_matched_pair, lambda M: [check_matched_pair_hom_lie(M)]),
    ),
}


# -- reporting ---------------------------------------------------------------------


def _vec(v) -> list:
    return [as_text(x) for x in v]


def report_to_json(report: AxiomReport, source: str | None = None) -> dict:
    out = {
        "axiom": report.axiom,
        "passed": report.passed,
        "violations": [
            {"axiom": v.axiom, "indices": list(v.indices), "lhs": _vec(v.lhs), "rhs": _vec(v.rhs)}
            for v in report.violations
        ],
    }
    if source is not None:
        out["input"] = source
    return out


def _format_text(results: list[tuple[str, AxiomReport]], verdict: bool) -> str:
    lines = []
    for source, rep in results:
        flag = "PASS" if rep.passed else "FAIL"
        lines.append(f"[{flag}] {rep.axiom}  {source}")
        for v in rep.violations[:MAX_TEXT_VIOLATIONS]:
            idx = ", ".join(str(i) for i in v.indices)
            lines.append(f"    {v.axiom} at ({idx}): lhs {_vec(v.lhs)} rhs {_vec(v.rhs)}")
        extra = len(rep.violations) - MAX_TEXT_VIOLATIONS
        if extra > 0:
            lines.append(f"    ... {extra} more")
    lines.append(f"verdict: {'pass' if verdict else 'fail'}")
    return "\n".join(lines)


def _read_inputs(paths: Sequence[str]) -> list[tuple[str, bytes]]:
    data = []
    for p in paths:
        try:
            with open(p, "rb") as fh:
                data.append((p, fh.read()))
        except OSError as exc:
            raise InputError(f"{p}: {exc.strerror}") from None
    return data


def _parse(path: str, raw: bytes, kinds):
    if isinstance(kinds, str):
        kinds = (kinds,)
    try:
        obj = fileio.load_json(raw)
        found = fileio.detect_kind(obj) if len(kinds) > 1 else kinds[0]
        if found not in kinds:
            raise InputError(f"expected a {' or '.join(kinds)} file, found {found}")
        return fileio.parse_structure(raw, found)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit_run(args, command: str, inputs, results, started, extra=None) -> int:
    verdict = all(rep.passed for _, rep in results if _counts(rep))
    if args.json:
        doc = {
            "command": command,
            "inputs": [{"path": p, "sha256": hashlib.sha256(raw).hexdigest()} for p, raw in inputs],
            "reports": [report_to_json(rep, src) for src, rep in results],
            "verdict": "pass" if verdict else "fail",
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        }
        if extra:
            doc.update(extra)
        print(json.dumps(doc, sort_keys=True))
    else:
        for item in (extra or {}).get("equivalence", []):
            flags = ", ".join(f"{k}={v}" for k, v in item["conditions"].items())
            print(f"{item['input']}: {flags}; alpha^2=id: {item['alpha_squared_identity']}")
        print(_format_text(results, verdict))
    return EXIT_PASS if verdict else EXIT_FAIL


def _input_error(args, command: str, exc: Exception, started) -> int:
    if getattr(args, "json", False):
        doc = {
            "command": command,
            "error": str(exc),
            "inputs": [],
            "reports": [],
            "verdict": "error",
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        }
        print(json.dumps(doc, sort_keys=True))
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


def cmd_check(args) -> int:
    started = time.perf_counter()
    command = " ".join(["check", args.kind, *args.files])
    file_kind, fn = CHECKS[args.kind]
    try:
        inputs = _read_inputs(args.files)
        parsed = [(p, _parse(p, raw, file_kind)) for p, raw in inputs]
    except InputError as exc:
        return _input_error(args, command, exc, started)
    results = []
    extra = {}
    for path, x in parsed:
        if args.kind == "equivalence":
            reports, summary = _equivalence(x)
            extra.setdefault("equivalence", []).append({"input": path, **summary})
        else:
            reports = fn(x)
        results.extend((path, rep) for rep in reports)
    return _emit_run(args, command, inputs, results, started, extra)


def cmd_derive(args) -> int:
    started = time.perf_counter()
    command = " ".join(["derive", args.kind, *args.inputs, "-o", args.output])
    kinds, fn = DERIVATIONS[args.kind]
    try:
        if len(args.inputs) != len(kinds):
            raise InputError(f"derive {args.kind} takes {len(kinds)} input file(s), got {len(args.inputs)}")
        inputs = _read_inputs(args.inputs)
        items = [_parse(p, raw, k) for (p, raw), k in zip(inputs, kinds)]
        out, post = fn(items)
    except InputError as exc:
        return _input_error(args, command, exc, started)
    text = fileio.serialize(out) + "\n"
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        return _input_error(args, command, InputError(f"{args.output}: {exc.strerror}"), started)
    results = [(args.output, rep) for rep in post]
    return _emit_run(args, command, inputs, results, started)


def _parse_twist(text: str | None):
    if text is None:
        return None
    return parse_coefficients(text.replace(";", ","))


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            dim=args.dim,
            coefficients=parse_coefficients(args.set),
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            target=args.target,
            budget=args.budget,
            twist=_parse_twist(args.twist),
        )
        stream = search(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sink = None
    if args.output:
        sink = open(args.output, "w", encoding="utf-8")
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    emitted = 0
    try:
        for found in stream:
            if args.limit is not None and emitted >= args.limit:
                break
            line = fileio.serialize(found.instance)
            if args.out_dir:
                name = f"{args.target}-{found.index:012d}.json"
                with open(os.path.join(args.out_dir, name), "w", encoding="utf-8") as fh:
                    fh.write(line + "\n")
            elif sink is not None:
                sink.write(line + "\n")
            else:
                sys.stdout.write(line + "\n")
            emitted += 1
    finally:
        if sink is not None:
            sink.close()
    space = cfg.candidate_count if cfg.mode == "exhaustive" else cfg.samples
    print(f"{cfg.mode} search, target {cfg.target}: {space} candidates, {emitted} emitted", file=sys.stderr)
    return EXIT_PASS


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homcsa",
        description="Check, construct and search hom-center-symmetric algebras over exact rationals.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify the axioms of structures stored in files")
    c.add_argument("kind", choices=sorted(CHECKS))
    c.add_argument("files", nargs="+")
    c.add_argument("--json", action="store_true", help="machine-readable report")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("derive", help="build a derived structure and check it")
    d.add_argument("kind", choices=sorted(DERIVATIONS))
    d.add_argument("inputs", nargs="+")
    d.add_argument("-o", "--output", required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_derive)

    s = sub.add_parser("search", help="enumerate or sample structure constants")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--set", default="-1,0,1", help="comma-separated coefficients, e.g. -1,0,1/2")
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--target", choices=TARGETS, default="hom-csa")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--twist", help="fix the twist, row-major entries separated by , or ;")
    s.add_argument("--limit", type=int, help="stop after this many results")
    s.add_argument("-o", "--output", help="write JSON lines here instead of stdout")
    s.add_argument("--out-dir", help="write one file per result into this directory")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
