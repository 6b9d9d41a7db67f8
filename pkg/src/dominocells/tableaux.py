"""
Standard domino tableaux of rank r.

A tableau is stored as a grid of labels, one per square: 0 on the core
squares, and each label k in {1, ..., n} on exactly two adjacent squares
(a domino).  In a standard tableau of rank r the 0 squares form the
staircase [r, ..., 1] and labels increase along rows and columns; we also
work with "loose" tableaux whose 0 squares form an arbitrary order ideal,
which arise midway through cycle moves.

>>> t = DominoTableau(2, ((0, 0, 1, 1), (0, 2, 2), (3, 4, 4), (3,)))
>>> t.shape
(4, 3, 3, 1)
>>> t.is_split()
False
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, Tuple

from .shapes import Square, Shape, diagonal, is_young, staircase
from .wgroup import DescentSet

__all__ = [
    "DominoTableau", "TableauPair", "TableauError",
    "tau_of_tableau", "enhanced_tau_of_tableau", "enumerate_sdt",
    "core_tableau",
]


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class DominoTableau:
    rank: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    # -- basic geometry -------------------------------------------------

    @cached_property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @cached_property
    def size(self) -> int:
        return sum(self.shape)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        seen = sorted({x for row in self.rows for x in row if x != 0})
        return tuple(seen)

    @property
    def n(self) -> int:
        return len(self.labels)

    def label_at(self, sq: Square) -> int:
        """Label at a square; -1 when the square is outside the shape."""
        i, j = sq
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return -1

    @cached_property
    def dominos(self) -> Dict[int, FrozenSet[Square]]:
        """Map label -> the two squares it occupies."""
        positions: Dict[int, list] = {}
        for i, row in enumerate(self.rows, start=1):
            for j, x in enumerate(row, start=1):
                if x != 0:
                    positions.setdefault(x, []).append((i, j))
        return {k: frozenset(v) for k, v in positions.items()}

    def domino(self, k: int) -> FrozenSet[Square]:
        try:
            return self.dominos[k]
        except KeyError:
            raise TableauError(f"no domino labeled {k}") from None

    def is_vertical(self, k: int) -> bool:
        (i1, _), (i2, _) = sorted(self.domino(k))
        return i1 != i2

    @cached_property
    def core_squares(self) -> FrozenSet[Square]:
        return frozenset(
            (i, j)
            for i, row in enumerate(self.rows, start=1)
            for j, x in enumerate(row, start=1)
            if x == 0
        )

    # -- validation ------------------------------------------------------

    def check_structure(self) -> None:
        """Shape and tiling sanity, without the standardness conditions."""
        if not self.rows and self.rank == 0:
            return
        if self.rows and not is_young(self.shape):
            raise TableauError(f"rows {self.shape} are not weakly decreasing")
        if self.labels != tuple(range(1, len(self.labels) + 1)):
            raise TableauError(f"labels {self.labels} are not 1..n")
        for k, cells in self.dominos.items():
            if len(cells) != 2:
                raise TableauError(f"label {k} covers {len(cells)} squares, not 2")
            (i1, j1), (i2, j2) = sorted(cells)
            if abs(i1 - i2) + abs(j1 - j2) != 1:
                raise TableauError(f"label {k} squares {sorted(cells)} not adjacent")

    def check_standard(self, strict_core: bool = True) -> None:
        """Full validation; reports the first violated invariant.

        With strict_core the 0 squares must form the staircase of the rank;
        otherwise any top-left-justified 0 region (order ideal) is accepted.
        """
        self.check_structure()
        if strict_core and self.core_squares != frozenset(
            (i, j) for i, row_len in enumerate(staircase(self.rank), 1)
            for j in range(1, row_len + 1)
        ):
            raise TableauError(
                f"core squares {sorted(self.core_squares)} do not form the"
                f" rank-{self.rank} staircase"
            )
        # Weak increase along rows and columns, ties only inside one domino
        # (adjacency of the two squares of each label is already checked),
        # is equivalent to: core plus the dominos labeled <= k is a Young
        # diagram for every k.
        for i, row in enumerate(self.rows, start=1):
            for j in range(1, len(row)):
                if row[j - 1] > row[j]:
                    raise TableauError(
                        f"row {i} decreases at column {j}: {row[j - 1]} then {row[j]}"
                    )
        for i in range(1, len(self.rows)):
            upper, lower = self.rows[i - 1], self.rows[i]
            for j in range(len(lower)):
                if upper[j] > lower[j]:
                    raise TableauError(
                        f"column {j + 1} decreases at row {i}: {upper[j]} then {lower[j]}"
                    )

    def is_valid(self, strict_core: bool = True) -> bool:
        try:
            self.check_standard(strict_core=strict_core)
            return True
        except TableauError:
            return False

    # -- predicates ------------------------------------------------------

    def is_split(self) -> bool:
        """True iff some square of the diagonal d_{rank+2} lies outside the shape."""
        return any(
            self.label_at(sq) == -1 for sq in sorted(diagonal(self.rank + 2))
        )

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"rank": self.rank, "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "DominoTableau":
        data = json.loads(text)
        return cls(int(data["rank"]), tuple(tuple(r) for r in data["rows"]))

    def pretty(self) -> str:
        """Box drawing, one cell per square, with no wall inside a domino."""
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for row in self.rows for x in row) + 2
        canvas: Dict[Tuple[int, int], str] = {}

        def put(y, x, ch):
            if canvas.get((y, x)) != "+":
                canvas[(y, x)] = ch

        def same_domino(a: Square, b: Square) -> bool:
            la, lb = self.label_at(a), self.label_at(b)
            return la == lb and la > 0

        for (i, j) in ((i, j) for i, r in enumerate(self.rows, 1)
                       for j in range(1, len(r) + 1)):
            y, x = 2 * (i - 1), (width + 1) * (j - 1)
            for corner in ((y, x), (y, x + width + 1), (y + 2, x), (y + 2, x + width + 1)):
                put(*corner, "+")
            if not same_domino((i, j), (i - 1, j)):
                for k in range(1, width + 1):
                    put(y, x + k, "-")
            if not same_domino((i, j), (i + 1, j)):
                for k in range(1, width + 1):
                    put(y + 2, x + k, "-")
            if not same_domino((i, j), (i, j - 1)):
                put(y + 1, x, "|")
            if not same_domino((i, j), (i, j + 1)):
                put(y + 1, x + width + 1, "|")
            for k, ch in enumerate(str(self.label_at((i, j))).center(width), start=1):
                put(y + 1, x + k, ch)

        ymax = max(y for y, _ in canvas)
        xmax = max(x for _, x in canvas)
        lines = []
        for y in range(ymax + 1):
            lines.append("".join(canvas.get((y, x), " ") for x in range(xmax + 1)).rstrip())
        return "\n".join(lines)


def core_tableau(rank: int) -> DominoTableau:
    """The rank-r tableau with no dominos."""
    return DominoTableau(rank, tuple((0,) * k for k in staircase(rank)))


@dataclass(frozen=True)
class TableauPair:
    left: DominoTableau
    right: DominoTableau

    def __post_init__(self):
        if self.left.rank != self.right.rank:
            raise TableauError("pair ranks differ")
        if self.left.shape != self.right.shape:
            raise TableauError(
                f"pair shapes differ: {self.left.shape} vs {self.right.shape}"
            )

    @property
    def rank(self) -> int:
        return self.left.rank

    @property
    def shape(self) -> Shape:
        return self.left.shape

    @property
    def n(self) -> int:
        return self.left.n

    def is_split(self) -> bool:
        return self.left.is_split()

    def to_json(self) -> str:
        return json.dumps(
            {
                "rank": self.rank,
                "left": [list(r) for r in self.left.rows],
                "right": [list(r) for r in self.right.rows],
            }
        )


def tau_of_tableau(q: DominoTableau) -> DescentSet:
    """Tableau descent set: t when domino 1 is vertical, s_i when domino i
    lies strictly above domino i+1 (every row of i above every row of i+1)."""
    if q.n < 1:
        return DescentSet(frozenset())
    names = set()
    if q.is_vertical(1):
        names.add("t")
    for i in range(1, q.n):
        rows_i = {r for r, _ in q.domino(i)}
        rows_next = {r for r, _ in q.domino(i + 1)}
        if max(rows_i) < min(rows_next):
            names.add(f"s{i}")
    return DescentSet(frozenset(names))


def enhanced_tau_of_tableau(q: DominoTableau, ratio: int) -> DescentSet:
    """Descent set enriched with t_j for vertical dominos j <= rank+1, j-1 < ratio.

    Defined only when rank >= ratio - 1.
    """
    if ratio < 1:
        raise ValueError("ratio must be a positive integer")
    if q.rank < ratio - 1:
        raise TableauError(f"rank {q.rank} too small for ratio {ratio}")
    base = tau_of_tableau(q)
    ext = frozenset(
        f"t{j}"
        for j in range(2, min(q.rank + 1, q.n) + 1)
        if j - 1 < ratio and q.is_vertical(j)
    )
    return DescentSet(base.simple, ext)


def enumerate_sdt(n: int, rank: int) -> Iterator[DominoTableau]:
    """All standard domino tableaux of rank `rank` with n dominos.

    Built by adding dominos labeled 1..n at every position that keeps the
    union of core and placed dominos a Young diagram; each tableau arises
    exactly once.
    """
    core = staircase(rank)

    def grow(rows: Tuple[Tuple[int, ...], ...], k: int) -> Iterator:
        shape = tuple(len(r) for r in rows)

        def row_len(i):
            if i <= 0:
                return 1 << 30  # no constraint above row 1
            return shape[i - 1] if i <= len(shape) else 0

        nrows = len(shape)
        for i in range(1, nrows + 2):
            j = row_len(i) + 1
            # horizontal domino at (i, j), (i, j+1)
            if row_len(i - 1) >= j + 1:
                yield _with_domino(rows, k, ((i, j), (i, j + 1)))
            # vertical domino at (i, j), (i+1, j)
            if row_len(i - 1) >= j and row_len(i + 1) == j - 1:
                yield _with_domino(rows, k, ((i, j), (i + 1, j)))

    def _with_domino(rows, k, cells):
        grid = [list(r) for r in rows]
        for (i, j) in cells:
            while len(grid) < i:
                grid.append([])
            while len(grid[i - 1]) < j:
                grid[i - 1].append(k)
        return tuple(tuple(r) for r in grid)

    start = tuple((0,) * c for c in core)
    frontier = [start]
    for k in range(1, n + 1):
        frontier = [g for rows in frontier for g in grow(rows, k)]
    for rows in frontier:
        t = DominoTableau(rank, rows)
        t.check_standard()
        yield t


if __name__ == "__main__":
    import doctest

    doctest.testmod()
