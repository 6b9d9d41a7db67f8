"""
Integer partitions as Young diagrams, removable dominos, 2-cores and rank.

A shape is a weakly decreasing tuple of positive integers (row lengths).
Squares are 1-indexed: (i, j) lies in row i, column j.  A domino is a pair
of adjacent squares; deleting removable dominos from a diagram always
terminates in a staircase [r, r-1, ..., 1], the 2-core, and r is the rank.

>>> two_core((7, 6, 1, 1, 1))
((3, 2, 1), 3)
>>> staircase(3)
(3, 2, 1)
"""

from __future__ import annotations

from typing import FrozenSet, Iterator, Optional, Tuple

__all__ = [
    "Shape", "Square", "staircase", "is_young", "cells_of_shape",
    "shape_contains", "removable_dominos", "delete_domino", "two_core",
    "diagonal", "shape_from_cells",
]

Shape = tuple  # weakly decreasing tuple[int, ...]
Square = tuple  # (row, col), 1-indexed


def staircase(r: int) -> Shape:
    return tuple(range(r, 0, -1))


def is_young(rows) -> bool:
    rows = tuple(rows)
    return all(x > 0 for x in rows) and all(a >= b for a, b in zip(rows, rows[1:]))


def cells_of_shape(shape: Shape) -> Iterator[Square]:
    for i, row_len in enumerate(shape, start=1):
        for j in range(1, row_len + 1):
            yield (i, j)


def shape_contains(shape: Shape, sq: Square) -> bool:
    i, j = sq
    return 1 <= i <= len(shape) and 1 <= j <= shape[i - 1]


def shape_from_cells(cells) -> Shape:
    """Shape of a set of cells; raises if they do not form a Young diagram."""
    rows: dict = {}
    for (i, j) in cells:
        rows[i] = rows.get(i, 0) + 1
    if not rows:
        return ()
    shape = tuple(rows.get(i, 0) for i in range(1, max(rows) + 1))
    if not is_young(shape) or sorted(cells) != sorted(cells_of_shape(shape)):
        raise ValueError("cells do not form a Young diagram")
    return shape


def _all_domino_positions(shape: Shape) -> Iterator[FrozenSet[Square]]:
    for sq in cells_of_shape(shape):
        i, j = sq
        if shape_contains(shape, (i, j + 1)):
            yield frozenset({sq, (i, j + 1)})
        if shape_contains(shape, (i + 1, j)):
            yield frozenset({sq, (i + 1, j)})


def delete_domino(shape: Shape, domino: FrozenSet[Square]) -> Optional[Shape]:
    """Resulting shape, or None when deletion does not leave a Young diagram
    (the empty diagram and diagrams containing (1,1) are the legal results)."""
    remaining = set(cells_of_shape(shape)) - set(domino)
    if not remaining:
        return ()
    if (1, 1) not in remaining:
        return None
    try:
        return shape_from_cells(remaining)
    except ValueError:
        return None


def removable_dominos(shape: Shape) -> FrozenSet[FrozenSet[Square]]:
    """All domino positions whose deletion leaves a Young diagram."""
    return frozenset(
        d for d in _all_domino_positions(shape) if delete_domino(shape, d) is not None
    )


def two_core(shape: Shape, order_seed: Optional[int] = None) -> Tuple[Shape, int]:
    """The 2-core and rank of a shape, by iterated domino deletion.

    The result does not depend on the deletion order; `order_seed` picks a
    different order so the tests can check exactly that.

    >>> two_core((2,))
    ((), 0)
    """
    if not is_young(shape):
        raise ValueError(f"not a partition: {shape}")
    current = tuple(shape)
    deleted = 0
    while True:
        options = sorted(removable_dominos(current), key=sorted)
        if not options:
            break
        if order_seed is None:
            pick = options[0]
        else:
            pick = options[(order_seed + deleted) % len(options)]
        current = delete_domino(current, pick)
        deleted += 1
    rank = len(current)
    if current != staircase(rank):
        raise AssertionError(f"2-core of {shape} is not a staircase: {current}")
    return current, rank


def diagonal(k: int) -> FrozenSet[Square]:
    """The k squares (i, j) with i + j = k + 1."""
    if k < 1:
        raise ValueError("diagonal index must be >= 1")
    return frozenset((i, k + 1 - i) for i in range(1, k + 1))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
