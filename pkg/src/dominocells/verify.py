"""
Exhaustive verification suites over whole signed permutation groups.

Each suite walks every element (or every tableau) within its bounds,
checks one family of identities exactly, and returns a machine-readable
report: check name, parameters, pass/fail, summary counts, a bounded list
of counterexamples, and wall time.  Reports are deterministic apart from
the wall-time field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .cells import (
    CellPartition, asymptotic_cells, class_of_tableau, combinatorial_cells,
)
from .cycles import (
    OPPOSITE, REGULAR, core_raise, cycle_partition, move_through, raise_rank,
)
from .hecke import WeightFunction, kl_cells
from .insertion import (
    asymptotic_bitableaux, insert, insertion_states, split_rank, uninsert,
)
from .tableaux import (
    enhanced_tau_of_tableau, enumerate_sdt, tau_of_tableau,
)
from .wgroup import (
    enhanced_tau_invariant, format_perm, group_elements, tau_invariant,
)

__all__ = [
    "Report", "verify_insertion", "verify_tau", "verify_class_decomposition",
    "verify_conjecture", "verify_intermediate_structure",
]

COUNTEREXAMPLE_LIMIT = 10


@dataclass
class Report:
    check: str
    params: Dict
    status: str = "pass"
    counts: Dict = field(default_factory=dict)
    counterexamples: List = field(default_factory=list)
    ms: float = 0.0
    _overflow: int = 0

    def fail(self, counterexample, verbose: bool = False) -> None:
        self.status = "fail"
        if verbose or len(self.counterexamples) < COUNTEREXAMPLE_LIMIT:
            self.counterexamples.append(counterexample)
        else:
            self._overflow += 1

    def bump(self, key: str, amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "counts": self.counts,
            "counterexamples": self.counterexamples,
            "ms": round(self.ms, 3),
        }
        if self._overflow:
            out["counterexamples_truncated"] = self._overflow
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        status = self.status.upper()
        extras = " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        line = f"[{status}] {self.check} {self.params} {extras} ({self.ms:.0f} ms)"
        if self.counterexamples:
            line += f"\n  first counterexample: {self.counterexamples[0]}"
        return line


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.ms = (time.perf_counter() - t0) * 1000.0
        return report
    return wrapper


@_timed
def verify_insertion(n: int, rmax: int, verbose: bool = False) -> Report:
    """Bijectivity, roundtrips, the counting identity, bitableau agreement
    in the stable range, and compatibility of the rank-raising map with
    insertion at the next rank."""
    report = Report("insertion", {"n": n, "rmax": rmax})
    elems = group_elements(n)
    order = (2 ** n) * _factorial(n)
    report.counts["elements"] = len(elems)
    for r in range(rmax + 1):
        seen = {}
        for w in elems:
            pair = insert(w, r)
            if pair.left.shape != pair.right.shape:
                report.fail({"kind": "shape", "w": format_perm(w), "r": r}, verbose)
            key = (pair.left.rows, pair.right.rows)
            if key in seen:
                report.fail(
                    {"kind": "collision", "r": r,
                     "w": format_perm(w), "other": format_perm(seen[key])},
                    verbose,
                )
            seen[key] = w
            try:
                if uninsert(pair) != w:
                    report.fail({"kind": "roundtrip", "w": format_perm(w), "r": r},
                                verbose)
            except Exception as exc:
                report.fail({"kind": "roundtrip", "w": format_perm(w), "r": r,
                             "error": str(exc)}, verbose)
            if r >= n - 1:
                bit = asymptotic_bitableaux(w, r)
                if bit.left != pair.left or bit.right != pair.right:
                    report.fail(
                        {"kind": "bitableaux", "w": format_perm(w), "r": r}, verbose
                    )
            try:
                lifted = raise_rank(pair)
                ok = lifted.left == insert(w, r + 1).left and \
                    lifted.right == insert(w, r + 1).right
            except Exception as exc:
                ok = False
                report.fail({"kind": "rank-raise", "w": format_perm(w), "r": r,
                             "error": str(exc)}, verbose)
            else:
                if not ok:
                    report.fail(
                        {"kind": "rank-raise", "w": format_perm(w), "r": r}, verbose
                    )
        by_shape: Dict = {}
        for t in enumerate_sdt(n, r):
            by_shape[t.shape] = by_shape.get(t.shape, 0) + 1
        total = sum(c * c for c in by_shape.values())
        report.bump("pairs_checked", len(elems))
        if total != order:
            report.fail({"kind": "counting", "r": r, "sum": total, "order": order},
                        verbose)
        if len(seen) != order:
            report.fail({"kind": "image-size", "r": r, "size": len(seen)}, verbose)
    report.counts["ranks"] = rmax + 1
    return report


@_timed
def verify_tau(n: int, verbose: bool = False) -> Report:
    """Descent-set compatibility of elements and tableaux, invariance of the
    tableau descent set under eligible cycle moves, and the step-wise
    horizontal/vertical dichotomy of partial insertions."""
    report = Report("tau", {"n": n})
    elems = group_elements(n)
    for w in elems:
        for r in range(n + 1):
            q = insert(w, r).right
            if tau_invariant(w) != tau_of_tableau(q):
                report.fail({"kind": "tau", "w": format_perm(w), "r": r}, verbose)
            for ratio in range(1, r + 2):
                if enhanced_tau_invariant(w, ratio) != enhanced_tau_of_tableau(q, ratio):
                    report.fail(
                        {"kind": "xi", "w": format_perm(w), "r": r, "ratio": ratio},
                        verbose,
                    )
        report.bump("elements")
    # step-wise dichotomy on partial insertions
    for w in elems:
        for r in range(n + 1):
            states = insertion_states(w, r)
            for k in range(1, min(r + 1, n) + 1):
                pk, qk = states[k].left, states[k].right
                for j in range(1, k + 1):
                    a = not pk.is_vertical(abs(w[j - 1]))
                    b = not qk.is_vertical(j)
                    c = w[j - 1] > 0
                    if not (a == b == c):
                        report.fail(
                            {"kind": "stepwise", "w": format_perm(w), "r": r,
                             "k": k, "j": j}, verbose,
                        )
                    for ratio in range(max(1, j), r + 2):
                        name = "t" if j == 1 else f"t{j}"
                        xi = enhanced_tau_invariant(w, ratio)
                        present = name in xi.simple or name in xi.extended
                        if present == c:
                            report.fail(
                                {"kind": "stepwise-xi", "w": format_perm(w),
                                 "r": r, "k": k, "j": j, "ratio": ratio}, verbose,
                            )
    # cycle moves preserve the descent set
    moves = 0
    for r in range(n + 1):
        for t in enumerate_sdt(n, r):
            for conv in (REGULAR, OPPOSITE):
                if conv == OPPOSITE and r == 0:
                    continue
                for cyc in cycle_partition(t, conv):
                    if cyc.kind == "closed" and len(cyc.labels) == 2:
                        lo, hi = sorted(cyc.labels)
                        if hi == lo + 1:
                            continue
                    moves += 1
                    moved = move_through(t, cyc.labels, conv)
                    if tau_of_tableau(moved) != tau_of_tableau(t):
                        report.fail(
                            {"kind": "cycle-tau", "rows": [list(x) for x in t.rows],
                             "labels": sorted(cyc.labels), "conv": conv}, verbose,
                        )
    report.counts["cycle_moves"] = moves
    return report


@_timed
def verify_class_decomposition(n: int, rank: int, verbose: bool = False) -> Report:
    """For every rank-r tableau T with core-raised partner T', subsets of the
    non-core open cycles transport to opposite cycles of T' and the unions
    of recording classes agree."""
    report = Report("classes", {"n": n, "rank": rank})
    for t in enumerate_sdt(n, rank):
        report.bump("tableaux")
        ncc = [c.labels for c in cycle_partition(t, REGULAR)
               if c.kind == "noncore-open"]
        t_up = core_raise(t)
        opp = [c.labels for c in cycle_partition(t_up, OPPOSITE)]
        for labels in ncc:
            covered = frozenset().union(
                frozenset(), *(g for g in opp if g & labels)
            )
            if covered != labels:
                report.fail(
                    {"kind": "transport", "rows": [list(x) for x in t.rows],
                     "labels": sorted(labels)}, verbose,
                )
        union_low = set()
        union_high = set()
        for mask in range(1 << len(ncc)):
            labels = frozenset().union(
                frozenset(), *(ncc[i] for i in range(len(ncc)) if mask >> i & 1)
            )
            t_u = move_through(t, labels, REGULAR)
            t_up_u = move_through(t_up, labels, OPPOSITE)
            union_low |= class_of_tableau(t_u, n)
            union_high |= class_of_tableau(t_up_u, n)
        if union_low != union_high:
            report.fail(
                {"kind": "class-union", "rows": [list(x) for x in t.rows],
                 "low": len(union_low), "high": len(union_high)}, verbose,
            )
    return report


@_timed
def verify_conjecture(
    n: int, ratio, cache_dir: Optional[str] = None, verbose: bool = False
) -> Report:
    """Combinatorial cells equal Kazhdan-Lusztig cells at ratio b/a, all
    three sides; `ratio` may be an integer or the string 'all'."""
    ratios = list(range(1, n + 1)) if ratio in ("all", None) else [int(ratio)]
    report = Report("conjecture", {"n": n, "ratios": ratios})
    for rt in ratios:
        weights = WeightFunction(1, rt)
        for side in ("L", "R", "LR"):
            comb = combinatorial_cells(n, rt - 1, side)
            kl = kl_cells(n, weights, side, cache_dir=cache_dir)
            report.counts[f"blocks_r{rt}_{side}"] = len(comb.blocks)
            if not comb.same_partition(kl):
                diff = _first_block_difference(comb, kl)
                report.fail(
                    {"kind": "partition", "ratio": rt, "side": side, "where": diff},
                    verbose,
                )
    return report


@_timed
def verify_intermediate_structure(
    n: int, cache_dir: Optional[str] = None, verbose: bool = False
) -> Report:
    """Structure of the cells at ratio n-1: split and non-split elements are
    unions of left cells; split cells are asymptotic; non-split cells are
    tau-classes of non-split elements, each a union of exactly two
    asymptotic cells; equal descent sets at rank n-1 force the recording
    tableaux to agree up to the single opposite non-core cycle."""
    if n < 2:
        raise ValueError("needs n >= 2")
    report = Report("intermediate", {"n": n})
    elems = group_elements(n)
    split = {w for w in elems if split_rank(w) < n - 1}
    nonsplit = set(elems) - split
    kl = kl_cells(n, WeightFunction(1, n - 1), "L", cache_dir=cache_dir)
    asym = asymptotic_cells(n, "L")
    asym_blocks = set(asym.blocks)
    report.counts["kl_blocks"] = len(kl.blocks)
    report.counts["split_elements"] = len(split)
    # (i) split/non-split are unions of cells
    for block in kl.blocks:
        if block & split and block & nonsplit:
            report.fail({"kind": "mixed-block", "size": len(block)}, verbose)
    # (ii) split cells are asymptotic cells
    for block in kl.blocks:
        if block <= split and block not in asym_blocks:
            report.fail({"kind": "split-not-asymptotic", "size": len(block)}, verbose)
    # (iii) non-split cells = tau classes of non-split elements, two asymptotic cells each
    tau_classes: Dict = {}
    for w in nonsplit:
        tau_classes.setdefault(str(tau_invariant(w)), set()).add(w)
    nonsplit_blocks = [b for b in kl.blocks if b <= nonsplit]
    if len(nonsplit_blocks) != len(tau_classes):
        report.fail(
            {"kind": "tau-class-count", "cells": len(nonsplit_blocks),
             "classes": len(tau_classes)}, verbose,
        )
    for block in nonsplit_blocks:
        parts = [a for a in asym_blocks if a <= block]
        if set().union(*parts) != set(block) or len(parts) != 2:
            report.fail({"kind": "not-two-asymptotic", "size": len(block)}, verbose)
        if frozenset(tau_classes.get(str(tau_invariant(min(block))), ())) != block:
            report.fail({"kind": "tau-class-mismatch", "size": len(block)}, verbose)
    # (iv) rank n-1 recording tableaux of non-split elements with equal tau
    by_tau: Dict = {}
    for w in sorted(nonsplit):
        by_tau.setdefault(str(tau_invariant(w)), []).append(insert(w, n - 1).right)
    for tau_name, tabs in sorted(by_tau.items()):
        reps = {t.rows for t in tabs}
        base = tabs[0]
        opp_ncc = [c for c in cycle_partition(base, OPPOSITE)
                   if c.kind == "noncore-open"]
        if len(opp_ncc) != 1 or opp_ncc[0].labels != frozenset({n}):
            report.fail({"kind": "opp-ncc", "tau": tau_name}, verbose)
            continue
        partner = move_through(base, {n}, OPPOSITE)
        if reps != {base.rows, partner.rows}:
            report.fail({"kind": "two-tableaux", "tau": tau_name,
                         "count": len(reps)}, verbose)
    # (v) the closing equivalence at rank n-2
    comb = combinatorial_cells(n, n - 2, "L")
    if not comb.same_partition(kl):
        report.fail({"kind": "closing-iff"}, verbose)
    # cross-count emitted in the report
    split_asym = {a for a in asym_blocks if a <= split}
    report.counts["split_asymptotic_cells"] = len(split_asym)
    report.counts["nonsplit_tau_classes"] = len(tau_classes)
    if len(kl.blocks) != len(split_asym) + len(tau_classes):
        report.fail({"kind": "cell-count"}, verbose)
    return report


def _first_block_difference(a: CellPartition, b: CellPartition):
    for block in a.blocks:
        if block not in set(b.blocks):
            w = min(block)
            return {
                "w": format_perm(w),
                "block_a": sorted(format_perm(x) for x in block)[:4],
                "block_b": sorted(format_perm(x) for x in b.block_of(w))[:4],
            }
    return None


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
