import pytest
from hypothesis import given, strategies as st

from dominocells.insertion import (
    asymptotic_bitableaux, insert, insertion_states, rs_insert, rs_uninsert,
    split_rank, uninsert,
)
from dominocells.tableaux import core_tableau
from dominocells.wgroup import enumerate_group, is_nonsplit

W = (4, 1, -3, -2)

FIXTURES = {
    0: ([[1, 1, 4], [2, 3, 4], [2, 3]], [[1, 1, 4], [2, 2, 4], [3, 3]]),
    1: ([[0, 1, 1], [2, 3, 4], [2, 3, 4]], [[0, 1, 1], [2, 2, 4], [3, 3, 4]]),
    2: ([[0, 0, 1, 1], [0, 3, 4], [2, 3, 4], [2]],
        [[0, 0, 1, 1], [0, 2, 2], [3, 4, 4], [3]]),
    3: ([[0, 0, 0, 1, 1], [0, 0, 4, 4], [0, 3], [2, 3], [2]],
        [[0, 0, 0, 1, 1], [0, 0, 2, 2], [0, 4], [3, 4], [3]]),
}


@pytest.mark.parametrize("rank", sorted(FIXTURES))
def test_insertion_fixtures(rank):
    pair = insert(W, rank)
    left, right = FIXTURES[rank]
    assert [list(r) for r in pair.left.rows] == left
    assert [list(r) for r in pair.right.rows] == right
    pair.left.check_standard()
    pair.right.check_standard()


def test_empty_insertion():
    pair = insert((), 2)
    assert pair.left == core_tableau(2) and pair.n == 0
    assert uninsert(pair) == ()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_insertion_is_injective_and_same_shape(n):
    for r in range(n + 1):
        seen = set()
        for w in enumerate_group(n):
            pair = insert(w, r)
            assert pair.left.shape == pair.right.shape
            key = (pair.left.rows, pair.right.rows)
            assert key not in seen
            seen.add(key)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_uninsert_roundtrip(n):
    for w in enumerate_group(n):
        for r in range(n + 1):
            assert uninsert(insert(w, r)) == w


def test_uninsert_of_fixture():
    assert uninsert(insert(W, 2)) == W


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bitableau_model_matches_insertion_in_stable_range(n):
    for w in enumerate_group(n):
        for r in (n - 1, n, n + 1):
            if r < 0:
                continue
            a = insert(w, r)
            b = asymptotic_bitableaux(w, r)
            assert (a.left, a.right) == (b.left, b.right)


def test_bitableau_rejects_low_rank():
    with pytest.raises(ValueError):
        asymptotic_bitableaux((2, -1, 3), 1)


def test_identity_inserts_as_one_row():
    pair = asymptotic_bitableaux((1, 2, 3))
    assert pair.left == pair.right
    assert all(not pair.left.is_vertical(k) for k in (1, 2, 3))
    single = asymptotic_bitableaux((-1,))
    assert single.left.is_vertical(1)


def test_split_rank_fixtures():
    assert split_rank(W) == 3
    assert split_rank((1, 2, 3, 4)) == 0
    assert insert(W, 2).is_split() is False
    assert insert(W, 3).is_split() is True


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_split_rank_matches_decreasing_criterion(n):
    for w in enumerate_group(n):
        assert (split_rank(w) == n - 1) == is_nonsplit(w)


def test_partial_states_track_shapes():
    states = insertion_states(W, 2)
    assert len(states) == 5
    assert states[0].n == 0 and states[-1].right == insert(W, 2).right
    for k in range(1, 5):
        assert states[k].left.shape == states[k].right.shape
        assert set(states[k].right.labels) == set(range(1, k + 1))


def test_recording_restriction_is_split():
    # labels 1..r+1 of the recording tableau always form a split tableau
    for n in (2, 3, 4):
        for w in enumerate_group(n):
            for r in range(n):
                q = insert(w, r).right
                keep = {0} | set(range(1, r + 2))
                rows = []
                for row in q.rows:
                    rows.append(tuple(x for x in row if x in keep))
                from dominocells.tableaux import DominoTableau
                cut = DominoTableau(r, tuple(t for t in rows if t))
                # restriction keeps a left-justified diagram
                cut.check_structure()
                assert cut.is_split()


@given(st.permutations(range(1, 7)))
def test_rs_roundtrip(seq):
    p, q = rs_insert(seq)
    assert rs_uninsert(p, q) == tuple(seq)
