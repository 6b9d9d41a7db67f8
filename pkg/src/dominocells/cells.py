"""
Combinatorial cell partitions of the signed permutation group.

Two elements share a left combinatorial r-cell when their right insertion
tableaux agree up to moving through a set of non-core open cycles; right
cells use the left tableaux, and two-sided cells are the transitive
closure of both.  For r >= n - 1 the partitions stabilize ("asymptotic"
cells).  Partitions are stored with canonically sorted blocks so they can
be compared and serialized deterministically.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Tuple

from .cycles import REGULAR, cycle_partition, move_through
from .insertion import insert
from .tableaux import DominoTableau
from .wgroup import SignedPerm, group_elements

__all__ = [
    "CellPartition", "class_of_tableau", "cell_fingerprint",
    "combinatorial_cells", "asymptotic_cells", "partition_from_blocks",
]


@dataclass(frozen=True)
class CellPartition:
    n: int
    label: str
    blocks: Tuple[FrozenSet[SignedPerm], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _canonical_blocks(self.blocks))
        covered = sorted(w for b in self.blocks for w in b)
        if covered != sorted(group_elements(self.n)):
            raise ValueError(f"blocks do not partition W_{self.n}")

    def block_of(self, w: SignedPerm) -> FrozenSet[SignedPerm]:
        for b in self.blocks:
            if w in b:
                return b
        raise KeyError(w)

    def same_partition(self, other: "CellPartition") -> bool:
        return self.n == other.n and self.blocks == other.blocks

    def refines(self, other: "CellPartition") -> bool:
        """Every block of self lies inside a block of other."""
        lookup = {w: i for i, b in enumerate(other.blocks) for w in b}
        return all(len({lookup[w] for w in b}) == 1 for b in self.blocks)

    def common_refinement(self, other: "CellPartition") -> "CellPartition":
        lookup = {w: i for i, b in enumerate(other.blocks) for w in b}
        pieces: Dict[Tuple[int, int], set] = {}
        for i, b in enumerate(self.blocks):
            for w in b:
                pieces.setdefault((i, lookup[w]), set()).add(w)
        return CellPartition(
            self.n,
            f"meet({self.label},{other.label})",
            tuple(frozenset(p) for p in pieces.values()),
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "label": self.label,
                "blocks": [[list(w) for w in sorted(b)] for b in self.blocks],
            }
        )


def _canonical_blocks(blocks) -> Tuple[FrozenSet[SignedPerm], ...]:
    return tuple(sorted((frozenset(b) for b in blocks), key=lambda b: min(b)))


def partition_from_blocks(n: int, label: str, blocks) -> CellPartition:
    return CellPartition(n, label, tuple(frozenset(b) for b in blocks))


def class_of_tableau(t: DominoTableau, n: int) -> FrozenSet[SignedPerm]:
    """All w whose rank-r recording tableau equals t."""
    if t.n != n:
        raise ValueError(f"tableau has {t.n} dominos, expected {n}")
    return frozenset(
        w for w in group_elements(n) if insert(w, t.rank).right == t
    )


@lru_cache(maxsize=1 << 17)
def cell_fingerprint(t: DominoTableau) -> Tuple[Tuple[int, ...], ...]:
    """Canonical representative of t modulo moving through subsets of its
    non-core open cycles: the lexicographically least grid in the orbit."""
    ncc = [c.labels for c in cycle_partition(t, REGULAR) if c.kind == "noncore-open"]
    best = t.rows
    for size in range(1, len(ncc) + 1):
        for subset in itertools.combinations(ncc, size):
            labels = frozenset().union(*subset)
            moved = move_through(t, labels, REGULAR)
            if moved.rows < best:
                best = moved.rows
    return best


def combinatorial_cells(n: int, rank: int, side: str = "L") -> CellPartition:
    """The left/right/two-sided combinatorial cells at the given rank."""
    if side not in ("L", "R", "LR"):
        raise ValueError("side must be L, R or LR")
    if rank < 0:
        raise ValueError("rank must be >= 0")
    elems = group_elements(n)
    if side in ("L", "R"):
        groups: Dict[Tuple, list] = {}
        for w in elems:
            pair = insert(w, rank)
            t = pair.right if side == "L" else pair.left
            groups.setdefault(cell_fingerprint(t), []).append(w)
        blocks = tuple(frozenset(g) for g in groups.values())
        return CellPartition(n, f"comb r={rank} {side}", blocks)
    left = combinatorial_cells(n, rank, "L")
    right = combinatorial_cells(n, rank, "R")
    parent = {w: w for w in elems}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for part in (left, right):
        for block in part.blocks:
            ws = sorted(block)
            for u in ws[1:]:
                ra, rb = find(ws[0]), find(u)
                if ra != rb:
                    parent[ra] = rb
    groups2: Dict[SignedPerm, set] = {}
    for w in elems:
        groups2.setdefault(find(w), set()).add(w)
    return CellPartition(
        n, f"comb r={rank} LR", tuple(frozenset(g) for g in groups2.values())
    )


def asymptotic_cells(n: int, side: str = "L", check_stability: bool = True) -> CellPartition:
    """Combinatorial cells in the stable range r >= n - 1."""
    rank = max(n - 1, 0)
    part = combinatorial_cells(n, rank, side)
    if check_stability and not part.same_partition(combinatorial_cells(n, rank + 1, side)):
        raise AssertionError(f"asymptotic cells not stable at n={n} side={side}")
    return CellPartition(n, f"asymptotic {side}", part.blocks)
