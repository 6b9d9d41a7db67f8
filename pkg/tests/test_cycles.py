import pytest
from hypothesis import given, strategies as st

from dominocells.cycles import (
    OPPOSITE, REGULAR, core_lower, core_raise, cycle_partition,
    extended_cycles, fixed_square, lower_rank, move_through, raise_rank,
)
from dominocells.insertion import insert
from dominocells.tableaux import (
    DominoTableau, TableauError, TableauPair, enumerate_sdt, tau_of_tableau,
)
from dominocells.wgroup import enumerate_group

S2 = DominoTableau(2, ((0, 0, 1, 1), (0, 3, 4), (2, 3, 4), (2,)))
T2 = DominoTableau(2, ((0, 0, 1, 1), (0, 2, 2), (3, 4, 4), (3,)))


def partition_sets(t, conv):
    return {c.labels for c in cycle_partition(t, conv)}


def kinds(t, conv):
    return {tuple(sorted(c.labels)): c.kind for c in cycle_partition(t, conv)}


def test_regular_cycles_of_the_rank2_pair():
    for t in (S2, T2):
        assert partition_sets(t, REGULAR) == {
            frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4})
        }
        k = kinds(t, REGULAR)
        assert k[(1,)] == k[(2,)] == k[(3,)] == "core-open"
        assert k[(4,)] == "noncore-open"


def test_opposite_cycles_of_the_left_tableau():
    assert partition_sets(S2, OPPOSITE) == {
        frozenset({1}), frozenset({2}), frozenset({3, 4})
    }
    k = kinds(S2, OPPOSITE)
    assert k[(1,)] == k[(2,)] == "core-open"
    assert k[(3, 4)] == "closed"


def _singleton_relocations(t, label, conv):
    """Independent oracle: all loose-standard single-domino relocations of
    `label` about its fixed square that avoid every other domino."""
    fix = fixed_square(t, label, conv)
    others = {sq for k in t.labels if k != label for sq in t.domino(k)}
    current = t.domino(label)
    results = []
    i, j = fix
    for cand in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
        if cand[0] < 1 or cand[1] < 1 or cand in others:
            continue
        pos = frozenset({fix, cand})
        if pos == current:
            continue
        base = {sq: lbl for k in t.labels if k != label
                for sq, lbl in zip(sorted(t.domino(k)), [k, k])}
        base.update({sq: label for sq in pos})
        zeros = t.core_squares - pos
        (vacated,) = current - pos - {fix} if fix in pos else (None,)
        for keep_vacated in (False, True):
            cells = dict(base)
            for sq in zeros:
                cells[sq] = 0
            if keep_vacated and vacated is not None:
                cells[vacated] = 0
            try:
                shape_rows = _rows_from_cells(cells)
            except ValueError:
                continue
            cand_t = DominoTableau(t.rank, shape_rows)
            if cand_t.is_valid(strict_core=False):
                results.append(cand_t)
    return results


def _rows_from_cells(cells):
    if not cells:
        return ()
    nrows = max(i for i, _ in cells)
    rows = []
    for i in range(1, nrows + 1):
        cols = sorted(j for (a, j) in cells if a == i)
        if cols != list(range(1, len(cols) + 1)):
            raise ValueError("not left justified")
        rows.append(tuple(cells[(i, j)] for j in cols))
    if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
        raise ValueError("not a Young diagram")
    return tuple(rows)


def test_opposite_cycles_of_the_right_tableau():
    # Label 3 admits no standard single-domino relocation that avoids the
    # other dominos, so it cannot form a cycle on its own: the whole chain
    # 2, 3, 4 moves together.
    assert _singleton_relocations(T2, 3, OPPOSITE) == []
    assert partition_sets(T2, OPPOSITE) == {frozenset({1}), frozenset({2, 3, 4})}
    k = kinds(T2, OPPOSITE)
    assert k[(1,)] == "core-open" and k[(2, 3, 4)] == "core-open"


def test_move_through_fixtures():
    assert move_through(S2, set(), REGULAR) == S2
    got = move_through(S2, {1, 2, 3}, REGULAR)
    assert got.rows == ((0, 0, 0, 1, 1), (0, 0, 4), (0, 3, 4), (2, 3), (2,))
    got = move_through(S2, {1, 2, 3, 4}, REGULAR)
    assert got.rows == ((0, 0, 0, 1, 1), (0, 0, 4, 4), (0, 3), (2, 3), (2,))
    got = move_through(T2, {1, 2, 3}, REGULAR)
    assert got.rows == ((0, 0, 0, 1, 1), (0, 0, 2, 2), (0, 4, 4), (3,), (3,))
    got = move_through(T2, {1, 2, 3, 4}, REGULAR)
    assert got.rows == ((0, 0, 0, 1, 1), (0, 0, 2, 2), (0, 4), (3, 4), (3,))


def test_move_through_rejects_partial_cycles():
    with pytest.raises(TableauError):
        move_through(S2, {3}, OPPOSITE)  # 3 and 4 share an opposite cycle


def test_extended_cycles_of_the_rank2_pair():
    ext = extended_cycles(S2, T2, REGULAR)
    assert set(ext.left_groups) == {
        frozenset({1}), frozenset({2}), frozenset({3, 4})
    }
    assert set(ext.right_groups) == {
        frozenset({1}), frozenset({2, 4}), frozenset({3})
    }
    pair = raise_rank(TableauPair(S2, T2))
    assert pair.left.rows == ((0, 0, 0, 1, 1), (0, 0, 4, 4), (0, 3), (2, 3), (2,))
    assert pair.right.rows == ((0, 0, 0, 1, 1), (0, 0, 2, 2), (0, 4), (3, 4), (3,))
    assert pair.rank == 3


S41 = DominoTableau(2, ((0, 0, 1, 1, 4, 4), (0, 3, 3, 5, 5), (2,), (2,)))
T41 = DominoTableau(2, ((0, 0, 3, 3, 4, 4), (0, 2, 2, 5, 5), (1,), (1,)))


def test_extended_cycles_of_the_rank2_n5_pair():
    ext = extended_cycles(S41, T41, REGULAR)
    assert set(ext.left_groups) == {
        frozenset({1, 4}), frozenset({2}), frozenset({3, 5})
    }
    assert set(ext.right_groups) == {
        frozenset({1}), frozenset({2, 5}), frozenset({3, 4})
    }
    left = move_through(S41, ext.left_labels, REGULAR)
    right = move_through(T41, ext.right_labels, REGULAR)
    assert left.rows == (
        (0, 0, 0, 1, 1, 4, 4), (0, 0, 3, 3, 5, 5), (0,), (2,), (2,))
    assert right.rows == (
        (0, 0, 0, 3, 3, 4, 4), (0, 0, 2, 2, 5, 5), (0,), (1,), (1,))


def test_split_pair_extends_by_nothing():
    # a split pair: the extended cycles are exactly the core cycles
    w = (2, 1, -3)
    pair = insert(w, 2)
    assert pair.is_split()
    ext = extended_cycles(pair.left, pair.right, REGULAR)
    core_left = {c.labels for c in cycle_partition(pair.left, REGULAR) if c.is_core}
    noncore_left = [c for c in cycle_partition(pair.left, REGULAR)
                    if c.kind == "noncore-open"]
    assert noncore_left == []
    assert set(ext.left_groups) == core_left


def _all_small_tableaux():
    out = []
    for n in (1, 2, 3):
        for r in (0, 1, 2):
            out.extend(enumerate_sdt(n, r))
    return out


SMALL = _all_small_tableaux()


@given(st.sampled_from(SMALL), st.sampled_from((REGULAR, OPPOSITE)))
def test_move_through_is_an_involution(t, conv):
    for cyc in cycle_partition(t, conv):
        assert move_through(move_through(t, cyc.labels, conv), cyc.labels, conv) == t


@given(st.sampled_from(SMALL))
def test_cycles_partition_the_labels(t):
    for conv in (REGULAR, OPPOSITE):
        labels = [x for c in cycle_partition(t, conv) for x in c.labels]
        assert sorted(labels) == list(t.labels)


@given(st.sampled_from(SMALL))
def test_classification_matches_shape_behaviour(t):
    cells = sum(t.shape)
    for conv in (REGULAR, OPPOSITE):
        for cyc in cycle_partition(t, conv):
            moved = move_through(t, cyc.labels, conv)
            if cyc.kind == "closed":
                assert moved.shape == t.shape
            elif cyc.kind == "core-open":
                assert sum(moved.shape) != cells
            else:
                assert moved.shape != t.shape and sum(moved.shape) == cells


def test_core_raise_and_lower_are_mutually_inverse():
    for n in (1, 2, 3):
        for r in (0, 1, 2):
            for t in enumerate_sdt(n, r):
                up = core_raise(t)
                assert up.rank == r + 1
                up.check_standard()
                assert core_lower(up) == t


def test_minimality_of_extension_by_brute_force():
    # no proper subset of the chosen non-core additions matches the shapes
    for w in enumerate_group(3):
        for r in (0, 1):
            pair = insert(w, r)
            ext = extended_cycles(pair.left, pair.right, REGULAR)
            cl = cycle_partition(pair.left, REGULAR)
            cr = cycle_partition(pair.right, REGULAR)
            core_l = frozenset().union(
                frozenset(), *(c.labels for c in cl if c.is_core))
            core_r = frozenset().union(
                frozenset(), *(c.labels for c in cr if c.is_core))
            open_l = [c.labels for c in cl if c.kind == "noncore-open"]
            open_r = [c.labels for c in cr if c.kind == "noncore-open"]
            best = None
            for mask_l in range(1 << len(open_l)):
                add_l = frozenset().union(frozenset(), *(
                    open_l[i] for i in range(len(open_l)) if mask_l >> i & 1))
                for mask_r in range(1 << len(open_r)):
                    add_r = frozenset().union(frozenset(), *(
                        open_r[i] for i in range(len(open_r)) if mask_r >> i & 1))
                    lhs = move_through(pair.left, core_l | add_l, REGULAR)
                    rhs = move_through(pair.right, core_r | add_r, REGULAR)
                    if lhs.shape == rhs.shape:
                        size = len(add_l) + len(add_r)
                        if best is None or size < best[0]:
                            best = (size, core_l | add_l, core_r | add_r)
            assert best is not None
            assert ext.left_labels == best[1]
            assert ext.right_labels == best[2]


def test_rank_round_trip_on_insertion_images():
    for n in (1, 2, 3):
        for w in enumerate_group(n):
            for r in range(n):
                pair = insert(w, r)
                again = lower_rank(raise_rank(pair))
                assert (again.left, again.right) == (pair.left, pair.right)


def test_lower_rank_of_the_printed_rank3_pair():
    s3 = DominoTableau(3, ((0, 0, 0, 1, 1), (0, 0, 4, 4), (0, 3), (2, 3), (2,)))
    t3 = DominoTableau(3, ((0, 0, 0, 1, 1), (0, 0, 2, 2), (0, 4), (3, 4), (3,)))
    down = lower_rank(TableauPair(s3, t3))
    assert (down.left, down.right) == (S2, T2)


def test_lower_rank_rejects_rank_zero():
    pair = insert((1, 2), 0)
    with pytest.raises(TableauError):
        lower_rank(pair)


def test_cycle_serialization():
    cycles = cycle_partition(S2, OPPOSITE)
    dumped = sorted((c.to_dict() for c in cycles), key=lambda d: d["labels"])
    assert dumped == [
        {"labels": [1], "kind": "core-open"},
        {"labels": [2], "kind": "core-open"},
        {"labels": [3, 4], "kind": "closed"},
    ]
    ext = extended_cycles(S2, T2, REGULAR)
    assert ext.to_dict() == {
        "left": [[1], [2], [3, 4]],
        "right": [[1], [2, 4], [3]],
    }


def test_tau_preserved_by_eligible_cycle_moves():
    for t in SMALL:
        for conv in (REGULAR, OPPOSITE):
            if conv == OPPOSITE and t.rank == 0:
                continue
            for cyc in cycle_partition(t, conv):
                if cyc.kind == "closed" and len(cyc.labels) == 2:
                    lo, hi = sorted(cyc.labels)
                    if hi == lo + 1:
                        continue
                assert tau_of_tableau(move_through(t, cyc.labels, conv)) == \
                    tau_of_tableau(t)
