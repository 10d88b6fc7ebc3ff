import pytest

from knot_mosaics.mosaic import Mosaic, Shift, rotate

# suitably connected 3x5 mosaic with left oxx, right oox, top oxoxo, bottom oxxox
SUITABLE_3_5 = [[4, 0, 3, 1, 3], [0, 0, 0, 3, 5], [2, 5, 5, 1, 0]]

# the usual three-crossing trefoil on a 4x4 board
TREFOIL = [[0, 2, 1, 0], [2, 9, 10, 1], [6, 3, 9, 4], [3, 5, 4, 0]]

# a period 4x3 mosaic with fundamental period (4, 3)
PERIOD_4_3 = [[9, 9, 9], [9, 4, 3], [6, 0, 0], [9, 1, 2]]

# fundamental patch of a (2,3)-periodic mosaic
PATCH_2_3 = [[9, 9, 5], [6, 6, 0]]


@pytest.fixture
def suitable_3_5():
    return Mosaic.from_rows(SUITABLE_3_5)


@pytest.fixture
def trefoil():
    return Mosaic.from_rows(TREFOIL)


@pytest.fixture
def period_pair():
    """Two distinct period 4x3 mosaics, the second the (2,1)-rotation of the first."""
    left = Mosaic.from_rows(PERIOD_4_3)
    return left, rotate(left, Shift(2, 1))


@pytest.fixture
def tiled_4_6():
    rows = [r * 2 for r in PATCH_2_3] * 2
    return Mosaic.from_rows(rows)
