"""Regenerate the committed golden corpus under ``golden/`` from the search engine.

    python3 scripts/build_golden.py [golden-dir]

Nothing in the corpus is written by hand: every instance is a search
result, and the witnesses are the first qualifying search results in
enumeration order.
"""

from __future__ import annotations

import json
import os
import shutil
import sys

from homcsa import fileio
from homcsa.bialg import alpha_squared_is_identity
from homcsa.repmod import check_bimodule, dual_bimodule, regular_bimodule
from homcsa.search import SearchConfig, search

SWAP = (0, 1, 1, 0)


def _write(path: str, x) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(fileio.serialize(x) + "\n")


def _is_identity(A) -> bool:
    n = A.dim
    return all(A.twist[i, j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def build(root: str) -> dict:
    if os.path.isdir(root):
        shutil.rmtree(root)
    csa_dir = os.path.join(root, "hom_csa_involutive")
    bi_dir = os.path.join(root, "bialgebra")
    wit_dir = os.path.join(root, "dual_bimodule")
    for d in (csa_dir, bi_dir, wit_dir):
        os.makedirs(d)

    counts = {}
    total = 0
    witness_pass = witness_fail = None
    for found in search(SearchConfig(2, (-1, 0, 1), target="hom-csa")):
        total += 1
        A = found.instance
        involutive = alpha_squared_is_identity(A)
        if involutive and not _is_identity(A):
            _write(os.path.join(csa_dir, f"{found.index:06d}.json"), A)
        nonzero = any(x != 0 for x in A.mul.ravel())
        if not nonzero:
            continue
        B = regular_bimodule(A)
        if involutive and not _is_identity(A) and witness_pass is None:
            if check_bimodule(dual_bimodule(B)).passed:
                witness_pass = B
        if not involutive and witness_fail is None:
            if not check_bimodule(dual_bimodule(B)).passed:
                witness_fail = B
    counts["hom-csa dim=2 set=-1,0,1"] = total
    counts["hom-lie dim=2 set=-1,0,1"] = sum(
        1 for _ in search(SearchConfig(2, (-1, 0, 1), target="hom-lie"))
    )
    counts["hom-csa dim=1 set=0,1"] = sum(1 for _ in search(SearchConfig(1, (0, 1))))

    n_bi = 0
    for found in search(SearchConfig(2, (-1, 0, 1), target="bialgebra", twist=SWAP)):
        _write(os.path.join(bi_dir, f"{found.index:012d}.json"), found.instance)
        n_bi += 1
    counts["bialgebra dim=2 set=-1,0,1 twist=swap"] = n_bi

    _write(os.path.join(wit_dir, "involutive_dual_passes.json"), witness_pass)
    _write(os.path.join(wit_dir, "non_involutive_dual_fails.json"), witness_fail)
    with open(os.path.join(root, "counts.json"), "w", encoding="utf-8") as fh:
        json.dump(counts, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return counts


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "golden")
    print(json.dumps(build(os.path.normpath(target)), indent=1, sort_keys=True))
