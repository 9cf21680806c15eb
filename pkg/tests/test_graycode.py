import pytest

from tritperm.graycode import (
    Direction,
    GrayCursor,
    TraversalExhausted,
    advance,
    jump,
    next_flip,
)


def test_jump_matches_incremental_walk():
    x = 0
    for i in range(1, 1 << 10):
        x ^= 1 << next_flip(i)
        assert x == jump(i)


def test_jump_neighbors_differ_in_one_bit():
    for i in range(1 << 10):
        assert bin(jump(i) ^ jump(i + 1)).count("1") == 1


def test_next_flip_is_trailing_zero_count():
    assert next_flip(1) == 0
    assert next_flip(2) == 1
    assert next_flip(12) == 2
    assert next_flip(1 << 40) == 40


def test_argument_validation():
    with pytest.raises(ValueError):
        next_flip(0)
    with pytest.raises(ValueError):
        jump(-1)


def test_advance_visits_every_nonempty_subset_once():
    n = 4
    c = GrayCursor()
    seen = set()
    for _ in range((1 << n) - 1):
        t, direction, c = advance(c, n)
        assert 0 <= t < n
        seen.add(c.x)
        # the reported direction describes the flipped bit's new state
        if direction is Direction.ENTER:
            assert c.x >> t & 1 == 1
        else:
            assert c.x >> t & 1 == 0
    assert len(seen) == (1 << n) - 1
    assert 0 not in seen


def test_advance_tracks_state_formula():
    c = GrayCursor()
    for i in range(1, 200):
        _, _, c = advance(c, 8)
        assert c.i == i
        assert c.x == jump(i)


def test_advance_exhausts():
    c = GrayCursor()
    n = 3
    for _ in range((1 << n) - 1):
        _, _, c = advance(c, n)
    with pytest.raises(TraversalExhausted):
        advance(c, n)


def test_advance_from_seeded_cursor():
    # a cursor seeded mid-range continues exactly where a fresh walk would be
    lo = 37
    seeded = GrayCursor(i=lo - 1, x=jump(lo - 1))
    fresh = GrayCursor()
    for _ in range(lo - 1):
        _, _, fresh = advance(fresh, 6)
    assert fresh == seeded
    t1, d1, s1 = advance(seeded, 6)
    t2, d2, s2 = advance(fresh, 6)
    assert (t1, d1, s1) == (t2, d2, s2)


def test_cursor_is_immutable():
    c = GrayCursor()
    advance(c, 4)
    assert c == GrayCursor(i=0, x=0)
