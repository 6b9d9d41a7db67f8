"""
Cycles in a rank-r domino tableau and the moving-through map.

Fixing one parity class of squares splits every domino into a fixed and a
variable square: under the regular convention the fixed squares (i, j)
have i + j of parity opposite to the rank, under the opposite convention
the same parity.  Relocating each domino about its fixed square partitions
the labels into cycles; moving through a cycle produces another domino
tableau, and the partition refines into

    closed        moving through keeps the shape,
    core-open     moving through changes the total number of squares,
    noncore-open  moving through changes the shape but not the count.

Moving through all regular core cycles raises the rank by one, all
opposite core cycles lower it by one; matching the two sides of a
same-shape pair through extended cycles gives the rank-raising and
rank-lowering bijections on pairs.

The square-level relocation rule: a domino labeled k whose variable
square sits below or left of its fixed square (i, j) pivots to the square
right of (i, j) when k exceeds the label at (i-1, j+1) and otherwise to
the square above; the mirrored rule (compare against (i+1, j-1)) applies
when the variable square sits above or right.  Labels at core squares and
off the top or left edge count as 0, squares beyond the shape as infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from .shapes import Square, shape_from_cells, staircase
from .tableaux import DominoTableau, TableauError, TableauPair

__all__ = [
    "REGULAR", "OPPOSITE", "Cycle", "ExtendedCycles",
    "fixed_square", "moved_domino", "cycle_partition", "cycles_by_kind",
    "move_through", "extended_cycles", "raise_rank", "lower_rank",
]

REGULAR = "regular"
OPPOSITE = "opposite"

_INF = float("inf")


@dataclass(frozen=True)
class Cycle:
    labels: FrozenSet[int]
    kind: str  # closed | core-open | noncore-open

    @property
    def is_open(self) -> bool:
        return self.kind != "closed"

    @property
    def is_core(self) -> bool:
        return self.kind == "core-open"

    def to_dict(self) -> dict:
        return {"labels": sorted(self.labels), "kind": self.kind}


def _is_fixed(sq: Square, rank: int, convention: str) -> bool:
    i, j = sq
    if convention == REGULAR:
        return (i + j) % 2 != rank % 2
    if convention == OPPOSITE:
        return (i + j) % 2 == rank % 2
    raise ValueError(f"unknown convention {convention!r}")


def fixed_square(t: DominoTableau, k: int, convention: str) -> Square:
    a, b = sorted(t.domino(k))
    return a if _is_fixed(a, t.rank, convention) else b


def _cmp_label(t: DominoTableau, sq: Square):
    """Label for the relocation comparisons: 0 off the top/left edge and on
    core squares, infinity beyond the shape."""
    i, j = sq
    if i < 1 or j < 1:
        return 0
    lbl = t.label_at(sq)
    if lbl == -1:
        return _INF
    return lbl


def moved_domino(t: DominoTableau, k: int, convention: str) -> FrozenSet[Square]:
    """The relocated position of domino k about its fixed square."""
    fix = fixed_square(t, k, convention)
    (var,) = t.domino(k) - {fix}
    i, j = fix
    di, dj = var[0] - i, var[1] - j
    if (di, dj) in ((1, 0), (0, -1)):  # variable below or left
        if k > _cmp_label(t, (i - 1, j + 1)):
            new = (i, j + 1)
        elif _cmp_label(t, (i - 1, j)) < k:
            new = (i - 1, j)
        else:  # unreachable on standard tableaux
            new = (i, j + 1)
    elif (di, dj) in ((-1, 0), (0, 1)):  # variable above or right
        if k < _cmp_label(t, (i + 1, j - 1)):
            new = (i, j - 1)
        elif _cmp_label(t, (i + 1, j)) > k:
            new = (i + 1, j)
        else:  # unreachable on standard tableaux
            new = (i, j - 1)
    else:
        raise TableauError(f"domino {k} squares are not adjacent")
    return frozenset({fix, new})


def _label_partition(t: DominoTableau, convention: str) -> list:
    """Partition of the labels: j and k share a cycle when the relocated
    position of one overlaps the current position of the other."""
    labels = list(t.labels)
    moved = {k: moved_domino(t, k, convention) for k in labels}
    parent = {k: k for k in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    cell_owner = {sq: k for k in labels for sq in t.domino(k)}
    for k in labels:
        for sq in moved[k]:
            owner = cell_owner.get(sq)
            if owner is not None and owner != k:
                union(k, owner)
    groups: Dict[int, set] = {}
    for k in labels:
        groups.setdefault(find(k), set()).add(k)
    return sorted((frozenset(g) for g in groups.values()), key=sorted)


def cycle_partition(t: DominoTableau, convention: str) -> Tuple[Cycle, ...]:
    """The cycles of t under the given convention, classified."""
    before = {sq for sq, _ in _cells_with_labels(t)}
    out = []
    for labels in _label_partition(t, convention):
        after = set(_apply_moves(t, labels, convention))
        if before == after:
            kind = "closed"
        elif len(before) != len(after):
            kind = "core-open"
        else:
            kind = "noncore-open"
        out.append(Cycle(labels, kind))
    return tuple(out)


def cycles_by_kind(t: DominoTableau, convention: str, *kinds: str) -> Tuple[Cycle, ...]:
    return tuple(c for c in cycle_partition(t, convention) if c.kind in kinds)


def _cells_with_labels(t: DominoTableau):
    for i, row in enumerate(t.rows, start=1):
        for j, lbl in enumerate(row, start=1):
            yield ((i, j), lbl)


def _apply_moves(t: DominoTableau, labels: Iterable[int], convention: str) -> Dict[Square, int]:
    """Cell -> label map (0 on core cells) after moving the given labels.

    A vacated square stays in the shape as a core square while anything
    remains to its right or below, and is excised once it trails; original
    core squares leave the shape only by being claimed."""
    labels = set(labels)
    placed: Dict[Square, int] = {}
    for k in t.labels:
        cells = moved_domino(t, k, convention) if k in labels else t.domino(k)
        for sq in cells:
            if sq in placed:
                raise TableauError(
                    f"labels {sorted(labels)} are not a union of cycles:"
                    f" collision at {sq}"
                )
            placed[sq] = k
    result = dict(placed)
    vacated = set()
    for (sq, lbl) in _cells_with_labels(t):
        if sq not in result:
            result[sq] = 0
            if lbl != 0:
                vacated.add(sq)
    changed = True
    while changed:
        changed = False
        for sq in sorted(vacated & result.keys(), reverse=True):
            i, j = sq
            if (i, j + 1) not in result and (i + 1, j) not in result:
                del result[sq]
                changed = True
    return result


def _tableau_from_cells(cells: Dict[Square, int], rank: int) -> DominoTableau:
    shape = shape_from_cells(cells.keys())
    rows = tuple(
        tuple(cells[(i, j)] for j in range(1, row_len + 1))
        for i, row_len in enumerate(shape, start=1)
    )
    t = DominoTableau(rank, rows)
    t.check_structure()
    return t


def move_through(t: DominoTableau, labels: Iterable[int], convention: str) -> DominoTableau:
    """Move through a union of cycles.

    The result keeps the rank tag of the input, so the same convention
    names the same fixed squares on it; rank-changing callers retag.
    """
    labels = frozenset(labels)
    if not labels:
        return t
    partition = _label_partition(t, convention)
    touched = [g for g in partition if g & labels]
    if frozenset().union(*touched) != labels:
        raise TableauError(
            f"labels {sorted(labels)} are not a union of cycles"
            f" (cycles: {[sorted(g) for g in partition]})"
        )
    return _move_unchecked(t, labels, convention)


def _move_unchecked(t: DominoTableau, labels, convention: str) -> DominoTableau:
    """move_through for label sets already known to be unions of cycles."""
    if not labels:
        return t
    return _tableau_from_cells(_apply_moves(t, labels, convention), t.rank)


@dataclass(frozen=True)
class ExtendedCycles:
    """Minimal matched enlargements of the core open cycles of a same-shape
    pair, grouped so that paired groups move the two shapes identically."""
    left_groups: Tuple[FrozenSet[int], ...]
    right_groups: Tuple[FrozenSet[int], ...]

    @property
    def left_labels(self) -> FrozenSet[int]:
        return frozenset().union(frozenset(), *self.left_groups)

    @property
    def right_labels(self) -> FrozenSet[int]:
        return frozenset().union(frozenset(), *self.right_groups)

    def to_dict(self) -> dict:
        return {
            "left": [sorted(g) for g in self.left_groups],
            "right": [sorted(g) for g in self.right_groups],
        }


def extended_cycles(
    left: DominoTableau, right: DominoTableau, convention: str = REGULAR
) -> ExtendedCycles:
    """Extended open cycles of each tableau of a pair relative to the other.

    Open cycles from the two sides are linked when their moves disturb a
    common square of the shared shape; every linkage component containing a
    core cycle must move entirely for the two moved shapes to agree, and
    those components are exactly the extended cycles.
    """
    if left.shape != right.shape:
        raise TableauError("pair shapes differ")
    sides = (left, right)
    nodes = []  # (side, labels, is_core, shape-delta)
    for side, t in enumerate(sides):
        base = {sq for sq, _ in _cells_with_labels(t)}
        for labels in _label_partition(t, convention):
            moved = set(_apply_moves(t, labels, convention))
            if moved == base:
                continue  # closed
            is_core = len(moved) != len(base)
            nodes.append((side, labels, is_core, frozenset(base ^ moved)))
    parent = list(range(len(nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            if nodes[a][0] != nodes[b][0] and nodes[a][3] & nodes[b][3]:
                parent[find(a)] = find(b)
    components: Dict[int, list] = {}
    for idx in range(len(nodes)):
        components.setdefault(find(idx), []).append(idx)
    left_groups, right_groups = [], []
    for comp in components.values():
        if not any(nodes[i][2] for i in comp):
            continue
        lg = frozenset().union(
            frozenset(), *(nodes[i][1] for i in comp if nodes[i][0] == 0)
        )
        rg = frozenset().union(
            frozenset(), *(nodes[i][1] for i in comp if nodes[i][0] == 1)
        )
        if lg:
            left_groups.append(lg)
        if rg:
            right_groups.append(rg)
    ext = ExtendedCycles(
        tuple(sorted(left_groups, key=sorted)), tuple(sorted(right_groups, key=sorted))
    )
    moved_l = set(_apply_moves(left, ext.left_labels, convention))
    moved_r = set(_apply_moves(right, ext.right_labels, convention))
    if moved_l != moved_r:
        raise TableauError("extended cycles failed to match the moved shapes")
    return ext


def _normalize_to_rank(t: DominoTableau, rank: int) -> DominoTableau:
    """Re-cut the core of a loose moved tableau to the rank staircase:
    staircase squares never touched by a domino join as core squares, and
    trailing core squares left outside the staircase are dropped."""
    cells = {sq: lbl for (sq, lbl) in _cells_with_labels(t)}
    want = {
        (i, j) for i, row_len in enumerate(staircase(rank), 1)
        for j in range(1, row_len + 1)
    }
    for sq in want - cells.keys():
        cells[sq] = 0
    changed = True
    while changed:
        changed = False
        for sq in sorted((s for s, v in cells.items() if v == 0 and s not in want),
                         reverse=True):
            i, j = sq
            if (i, j + 1) not in cells and (i + 1, j) not in cells:
                del cells[sq]
                changed = True
    out = _tableau_from_cells(cells, rank)
    if out.core_squares != frozenset(want):
        raise TableauError(f"core is not the rank-{rank} staircase")
    return out


def _core_labels(t: DominoTableau, convention: str) -> frozenset:
    base_size = sum(t.shape)
    return frozenset().union(
        frozenset(),
        *(g for g in _label_partition(t, convention)
          if len(_apply_moves(t, g, convention)) != base_size),
    )


def core_raise(t: DominoTableau) -> DominoTableau:
    """Move one tableau through all its regular core cycles: rank r+1."""
    moved = _move_unchecked(t, _core_labels(t, REGULAR), REGULAR)
    return _normalize_to_rank(moved, t.rank + 1)


def core_lower(t: DominoTableau) -> DominoTableau:
    """Move one tableau through all its opposite core cycles: rank r-1."""
    if t.rank < 1:
        raise TableauError("cannot lower the rank of a rank-0 tableau")
    moved = _move_unchecked(t, _core_labels(t, OPPOSITE), OPPOSITE)
    return _normalize_to_rank(moved, t.rank - 1)


def raise_rank(pair: TableauPair) -> TableauPair:
    """Move a rank-r pair through its regular extended cycles: rank r+1."""
    ext = extended_cycles(pair.left, pair.right, REGULAR)
    new_left = _move_unchecked(pair.left, ext.left_labels, REGULAR)
    new_right = _move_unchecked(pair.right, ext.right_labels, REGULAR)
    r = pair.rank + 1
    return TableauPair(_normalize_to_rank(new_left, r), _normalize_to_rank(new_right, r))


def lower_rank(pair: TableauPair) -> TableauPair:
    """Move a rank-(r+1) pair through its opposite extended cycles: rank r."""
    if pair.rank < 1:
        raise TableauError("cannot lower the rank of a rank-0 pair")
    ext = extended_cycles(pair.left, pair.right, OPPOSITE)
    new_left = _move_unchecked(pair.left, ext.left_labels, OPPOSITE)
    new_right = _move_unchecked(pair.right, ext.right_labels, OPPOSITE)
    r = pair.rank - 1
    return TableauPair(_normalize_to_rank(new_left, r), _normalize_to_rank(new_right, r))
