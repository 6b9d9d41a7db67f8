"""
Command line interface.

    dominocells verify insertion --n 4 --rank 4
    dominocells verify conjecture --n 3 --ratio all --json out.json
    dominocells cells --n 3 --rank 1 --side L --kind comb
    dominocells insert --perm "4 1 -3 -2" --rank 2 --steps

Exit status 0 when every requested check passes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List

from .cells import combinatorial_cells
from .hecke import WeightFunction, kl_cells
from .insertion import insert, insertion_states
from .verify import (
    Report, verify_class_decomposition, verify_conjecture, verify_insertion,
    verify_intermediate_structure, verify_tau,
)
from .wgroup import parse_perm


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dominocells",
        description="Exact domino-tableau combinatorics and Kazhdan-Lusztig cell verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument(
        "suite",
        choices=["insertion", "tau", "classes", "conjecture", "intermediate"],
    )
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--rank", type=int, default=None)
    ver.add_argument("--ratio", default=None, help="integer or 'all'")
    ver.add_argument("--cache", default=None, metavar="DIR")
    ver.add_argument("--json", default=None, metavar="PATH")
    ver.add_argument("--verbose", action="store_true")

    cel = sub.add_parser("cells", help="print a cell partition as JSON")
    cel.add_argument("--n", type=int, required=True)
    cel.add_argument("--rank", type=int, required=True)
    cel.add_argument("--side", choices=["L", "R", "LR"], default="L")
    cel.add_argument("--kind", choices=["comb", "kl"], default="comb")
    cel.add_argument("--ratio", type=int, default=None)
    cel.add_argument("--cache", default=None, metavar="DIR")

    ins = sub.add_parser("insert", help="insert a signed permutation")
    ins.add_argument("--perm", required=True, help='"4 1 -3 -2" or [4,1,-3,-2]')
    ins.add_argument("--n", type=int, default=None)
    ins.add_argument("--rank", type=int, required=True)
    ins.add_argument("--steps", action="store_true")
    ins.add_argument("--json", default=None, metavar="PATH")

    return parser


def _run_verify(args) -> List[Report]:
    if args.suite == "insertion":
        rmax = args.rank if args.rank is not None else args.n
        return [verify_insertion(args.n, rmax, verbose=args.verbose)]
    if args.suite == "tau":
        return [verify_tau(args.n, verbose=args.verbose)]
    if args.suite == "classes":
        ranks = [args.rank] if args.rank is not None else list(range(args.n + 1))
        return [
            verify_class_decomposition(args.n, r, verbose=args.verbose)
            for r in ranks
        ]
    if args.suite == "conjecture":
        return [
            verify_conjecture(
                args.n, args.ratio or "all", cache_dir=args.cache,
                verbose=args.verbose,
            )
        ]
    if args.suite == "intermediate":
        return [
            verify_intermediate_structure(
                args.n, cache_dir=args.cache, verbose=args.verbose
            )
        ]
    raise AssertionError(args.suite)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "verify":
        reports = _run_verify(args)
        for report in reports:
            print(report.summary())
        if args.json:
            payload = [r.to_dict() for r in reports]
            with open(args.json, "w") as fh:
                json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=2)
        return 0 if all(r.status == "pass" for r in reports) else 1

    if args.command == "cells":
        if args.kind == "comb":
            part = combinatorial_cells(args.n, args.rank, args.side)
        else:
            ratio = args.ratio if args.ratio is not None else args.rank + 1
            part = kl_cells(
                args.n, WeightFunction(1, ratio), args.side, cache_dir=args.cache
            )
        print(part.to_json())
        return 0

    if args.command == "insert":
        try:
            w = parse_perm(args.perm)
        except ValueError as exc:
            print(f"bad --perm: {exc}", file=sys.stderr)
            return 2
        if args.n is not None and args.n != len(w):
            print(f"--n {args.n} does not match the permutation length {len(w)}",
                  file=sys.stderr)
            return 2
        if args.steps:
            states = insertion_states(w, args.rank)
            for k, pair in enumerate(states):
                print(f"step {k}:")
                print(pair.left.pretty())
                print(pair.right.pretty())
            payload = {
                "perm": list(w),
                "rank": args.rank,
                "steps": [
                    {"left": [list(r) for r in s.left.rows],
                     "right": [list(r) for r in s.right.rows]}
                    for s in states
                ],
            }
        else:
            pair = insert(w, args.rank)
            print(pair.left.pretty())
            print(pair.right.pretty())
            payload = {
                "perm": list(w),
                "rank": args.rank,
                "left": [list(r) for r in pair.left.rows],
                "right": [list(r) for r in pair.right.rows],
            }
        if args.json:
            with open(args.json, "w") as fh:
                json.dump(payload, fh, indent=2)
        else:
            print(json.dumps(payload))
        return 0

    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
