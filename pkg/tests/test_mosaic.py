import random

import pytest
from hypothesis import given, settings, strategies as st

from knot_mosaics import oracle
from knot_mosaics.mosaic import (BOTTOM, LEFT, RIGHT, TILES, TOP, BoundaryWord,
                                 Mosaic, MosaicError, Shift, boundary_word,
                                 canonical_form, format_mosaic,
                                 fundamental_period, index_word,
                                 is_knot_mosaic, is_period_mosaic,
                                 is_suitably_boundary_connected,
                                 is_suitably_connected, parse_mosaic,
                                 render_ascii, rotate, word_index)


def test_tile_census():
    by_points = {}
    for t in TILES:
        by_points.setdefault(t.n_points, []).append(t.id)
    assert by_points == {0: [0], 2: [1, 2, 3, 4, 5, 6], 4: [7, 8, 9, 10]}


def test_two_point_tiles_cover_each_edge_pair_once():
    pairs = {tuple(s for s in ("left", "right", "top", "bottom") if t.cp(s))
             for t in TILES if t.n_points == 2}
    assert len(pairs) == 6


def test_convention_forced_by_quadrants():
    assert (TILES[1].cp_left, TILES[1].cp_bottom, TILES[1].cp_right) == (True, True, False)
    assert (TILES[2].cp_right, TILES[2].cp_bottom, TILES[2].cp_left) == (True, True, False)
    assert TILES[6].cp_top and TILES[6].cp_bottom and not TILES[6].cp_left
    assert len({(t.cp_left, t.cp_right, t.cp_top, t.cp_bottom) for t in TILES[7:]}) == 1


def test_word_order_for_three_letters():
    words = [index_word(i, 3) for i in range(8)]
    assert words == ["xxx", "oxx", "xox", "oox", "xxo", "oxo", "xoo", "ooo"]


@pytest.mark.parametrize("k", range(1, 9))
def test_word_index_round_trip(k):
    for i in range(1 << k):
        assert word_index(index_word(i, k)) == i
        assert BoundaryWord.from_index(i, k).index == i


def test_boundary_words(suitable_3_5):
    words = {s: str(boundary_word(suitable_3_5, s)) for s in (LEFT, RIGHT, TOP, BOTTOM)}
    assert words == {LEFT: "oxx", RIGHT: "oox", TOP: "oxoxo", BOTTOM: "oxxox"}
    assert is_suitably_connected(suitable_3_5)


def test_boundary_words_trivial():
    one = Mosaic.blank(1, 1)
    assert all(str(boundary_word(one, s)) == "x" for s in (LEFT, RIGHT, TOP, BOTTOM))
    word = boundary_word(Mosaic.blank(2, 2), LEFT)
    assert (str(word), word.index) == ("xx", 0)


def test_suitably_connected_examples():
    for t in range(11):
        assert is_suitably_connected(Mosaic(1, 1, (t,)))
    assert not is_suitably_connected(Mosaic.from_rows([[6], [0]]))


def test_boundary_connected_examples(period_pair):
    for mos in period_pair:
        assert is_suitably_boundary_connected(mos)
    assert is_suitably_boundary_connected(Mosaic.blank(3, 4))
    assert not is_suitably_boundary_connected(Mosaic(1, 1, (1,)))


def test_knot_mosaic_examples(trefoil):
    assert is_knot_mosaic(trefoil)
    assert is_knot_mosaic(Mosaic.blank(3, 3))
    assert not is_knot_mosaic(Mosaic(1, 1, (9,)))
    assert is_period_mosaic(trefoil)


def test_period_one_by_one():
    period = [t for t in range(11) if is_period_mosaic(Mosaic(1, 1, (t,)))]
    assert period == [0, 5, 6, 7, 8, 9, 10]


def test_rotation_relates_the_pair(period_pair):
    left, right = period_pair
    assert left != right
    assert rotate(left, Shift(2, 1)) == right
    assert canonical_form(left) == canonical_form(right)
    assert is_period_mosaic(right)


def test_rotation_identity(trefoil):
    assert rotate(trefoil, Shift(4, 4)) == trefoil
    assert rotate(trefoil, Shift(0, 0)) == trefoil


def test_canonical_blank():
    assert canonical_form(Mosaic.blank(2, 3)) == Mosaic.blank(2, 3)


def test_canonical_classes_2_2():
    forms = {canonical_form(m) for m in oracle.enumerate_mosaics(2, 2, oracle.PERIOD)}
    assert len(forms) == 110


def test_fundamental_period(tiled_4_6):
    assert is_period_mosaic(tiled_4_6)
    assert fundamental_period(tiled_4_6) == (2, 3)
    assert fundamental_period(Mosaic.blank(3, 5)) == (1, 1)


def test_fundamental_period_census_2_2():
    census = {}
    for mos in oracle.enumerate_mosaics(2, 2, oracle.PERIOD):
        pq = fundamental_period(mos)
        census[pq] = census.get(pq, 0) + 1
    assert census[1, 1] == 7
    assert sum(census.values()) == 359
    # oracle census, frozen
    assert census == {(1, 1): 7, (1, 2): 22, (2, 1): 22, (2, 2): 308}


def test_text_format_round_trip(trefoil):
    text = format_mosaic(trefoil)
    assert text.splitlines()[0] == "4 4"
    assert parse_mosaic(text) == trefoil
    assert render_ascii(trefoil).splitlines()[0] == ".r7."


@pytest.mark.parametrize("bad", ["", "2 2\n0 0\n", "1 1\n11\n", "1 2\n0\n"])
def test_text_format_rejects(bad):
    with pytest.raises(MosaicError):
        parse_mosaic(bad)


# properties ----------------------------------------------------------------

mosaics = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, 10), min_size=m * n, max_size=m * n).map(
        lambda t: Mosaic(m, n, tuple(t)))))
shifts = st.tuples(st.integers(-9, 9), st.integers(-9, 9))


@given(mosaics, shifts, shifts)
def test_rotation_is_group_action(mos, s1, s2):
    once = rotate(rotate(mos, Shift(*s1)), Shift(*s2))
    assert once == rotate(mos, Shift(s1[0] + s2[0], s1[1] + s2[1]))


@given(mosaics, shifts)
def test_canonical_form_invariant(mos, s):
    assert canonical_form(rotate(mos, Shift(*s))) == canonical_form(mos)


@given(mosaics)
def test_knot_implies_period(mos):
    if is_knot_mosaic(mos):
        assert is_period_mosaic(mos)


@pytest.fixture(scope="module")
def period_3_3():
    return list(oracle.enumerate_mosaics(3, 3, oracle.PERIOD))


def test_rotation_preserves_period(period_3_3):
    rng = random.Random(7)
    for mos in rng.sample(period_3_3, 500):
        s = Shift(rng.randrange(3), rng.randrange(3))
        assert is_period_mosaic(rotate(mos, s))


def test_fundamental_period_divides(period_3_3):
    rng = random.Random(11)
    for mos in rng.sample(period_3_3, 300):
        p, q = fundamental_period(mos)
        assert 3 % p == 0 and 3 % q == 0
        for a in range(3):
            for b in range(3):
                assert rotate(mos, Shift(a * p % 3, b * q % 3)) == mos
