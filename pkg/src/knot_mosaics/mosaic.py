"""Mosaic tiles, mosaics, connection-point predicates and cyclic rotations.

Tile convention (ids 0..10)::

    0  blank                      5  horizontal line  (l, r)
    1  arc left-bottom  (l, b)    6  vertical line    (t, b)
    2  arc right-bottom (r, b)    7  double arc       (l, r, t, b)
    3  arc right-top    (r, t)    8  double arc       (l, r, t, b)
    4  arc left-top     (l, t)    9  crossing         (l, r, t, b)
                                  10 crossing         (l, r, t, b)

Counting never distinguishes tiles 7..10, nor 3 from 4 beyond their flags.
Rows and columns are 0-based internally; text output is unaffected since
it never carries indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

LEFT, RIGHT, TOP, BOTTOM = "left", "right", "top", "bottom"
SIDES = (LEFT, RIGHT, TOP, BOTTOM)


@dataclass(frozen=True)
class Tile:
    id: int
    cp_left: bool
    cp_right: bool
    cp_top: bool
    cp_bottom: bool
    glyph: str

    @property
    def n_points(self) -> int:
        return self.cp_left + self.cp_right + self.cp_top + self.cp_bottom

    def cp(self, side: str) -> bool:
        return getattr(self, "cp_" + side)


TILES: tuple[Tile, ...] = (
    Tile(0, False, False, False, False, "."),
    Tile(1, True, False, False, True, "7"),
    Tile(2, False, True, False, True, "r"),
    Tile(3, False, True, True, False, "L"),
    Tile(4, True, False, True, False, "J"),
    Tile(5, True, True, False, False, "-"),
    Tile(6, False, False, True, True, "|"),
    Tile(7, True, True, True, True, "/"),
    Tile(8, True, True, True, True, "\\"),
    Tile(9, True, True, True, True, "+"),
    Tile(10, True, True, True, True, "x"),
)
N_TILES = len(TILES)

# flag lookup tables indexed by tile id, used in hot loops
CP_LEFT = tuple(t.cp_left for t in TILES)
CP_RIGHT = tuple(t.cp_right for t in TILES)
CP_TOP = tuple(t.cp_top for t in TILES)
CP_BOTTOM = tuple(t.cp_bottom for t in TILES)
_CP = {LEFT: CP_LEFT, RIGHT: CP_RIGHT, TOP: CP_TOP, BOTTOM: CP_BOTTOM}


class MosaicError(ValueError):
    pass


@dataclass(frozen=True)
class Shift:
    """A cyclic rotation by ``x`` rows and ``y`` columns."""

    x: int
    y: int

    def normalized(self, m: int, n: int) -> Shift:
        return Shift(self.x % m, self.y % n)


@dataclass(frozen=True)
class BoundaryWord:
    letters: str

    @property
    def length(self) -> int:
        return len(self.letters)

    @cached_property
    def index(self) -> int:
        return word_index(self.letters)

    @classmethod
    def from_index(cls, index: int, length: int) -> BoundaryWord:
        return cls(index_word(index, length))

    def __str__(self) -> str:
        return self.letters


def word_index(letters: str) -> int:
    """Reverse-lexicographic index: letter j (0-based) set to 'o' adds 2**j."""
    idx = 0
    for j, ch in enumerate(letters):
        if ch == "o":
            idx |= 1 << j
        elif ch != "x":
            raise MosaicError(f"bad state letter {ch!r}")
    return idx


def index_word(index: int, length: int) -> str:
    if not 0 <= index < (1 << length):
        raise MosaicError(f"index {index} out of range for length {length}")
    return "".join("o" if index >> j & 1 else "x" for j in range(length))


@dataclass(frozen=True)
class Mosaic:
    """An m x n grid of tile ids, stored row-major."""

    rows: int
    cols: int
    tiles: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise MosaicError("mosaic dimensions must be positive")
        if len(self.tiles) != self.rows * self.cols:
            raise MosaicError(
                f"expected {self.rows * self.cols} tiles, got {len(self.tiles)}"
            )
        if any(not 0 <= t < N_TILES for t in self.tiles):
            raise MosaicError("tile ids must lie in 0..10")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Mosaic:
        m = len(rows)
        n = len(rows[0]) if m else 0
        if any(len(r) != n for r in rows):
            raise MosaicError("ragged rows")
        return cls(m, n, tuple(t for r in rows for t in r))

    @classmethod
    def blank(cls, m: int, n: int) -> Mosaic:
        return cls(m, n, (0,) * (m * n))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.tiles[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.tiles[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.tiles[j::self.cols]

    def as_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]


def boundary_word(mosaic: Mosaic, side: str) -> BoundaryWord:
    """Connection-point word along one side, top-to-bottom or left-to-right."""
    if side not in _CP:
        raise MosaicError(f"unknown side {side!r}")
    flags = _CP[side]
    if side == LEFT:
        cells = mosaic.column(0)
    elif side == RIGHT:
        cells = mosaic.column(mosaic.cols - 1)
    elif side == TOP:
        cells = mosaic.row(0)
    else:
        cells = mosaic.row(mosaic.rows - 1)
    return BoundaryWord("".join("o" if flags[t] else "x" for t in cells))


def is_suitably_connected(mosaic: Mosaic) -> bool:
    m, n, t = mosaic.rows, mosaic.cols, mosaic.tiles
    for i in range(m):
        base = i * n
        for j in range(n - 1):
            if CP_RIGHT[t[base + j]] != CP_LEFT[t[base + j + 1]]:
                return False
    for i in range(m - 1):
        for j in range(n):
            if CP_BOTTOM[t[i * n + j]] != CP_TOP[t[(i + 1) * n + j]]:
                return False
    return True


def is_suitably_boundary_connected(mosaic: Mosaic) -> bool:
    return (boundary_word(mosaic, LEFT) == boundary_word(mosaic, RIGHT)
            and boundary_word(mosaic, TOP) == boundary_word(mosaic, BOTTOM))


def is_knot_mosaic(mosaic: Mosaic) -> bool:
    if not is_suitably_connected(mosaic):
        return False
    return all("o" not in boundary_word(mosaic, s).letters for s in SIDES)


def is_period_mosaic(mosaic: Mosaic) -> bool:
    return is_suitably_connected(mosaic) and is_suitably_boundary_connected(mosaic)


def rotate(mosaic: Mosaic, shift: Shift) -> Mosaic:
    """Cyclic rotation: the result has tile M[i - x, j - y] at (i, j)."""
    m, n = mosaic.rows, mosaic.cols
    x, y = shift.x % m, shift.y % n
    if x == 0 and y == 0:
        return mosaic
    t = mosaic.tiles
    out = []
    for i in range(m):
        src = ((i - x) % m) * n
        out.extend(t[src + (j - y) % n] for j in range(n))
    return Mosaic(m, n, tuple(out))


def rotations(mosaic: Mosaic) -> Iterable[Mosaic]:
    for x in range(mosaic.rows):
        for y in range(mosaic.cols):
            yield rotate(mosaic, Shift(x, y))


def canonical_form(mosaic: Mosaic) -> Mosaic:
    """Row-major lexicographic minimum over all m*n rotations."""
    return min(rotations(mosaic), key=lambda r: r.tiles)


def fundamental_period(mosaic: Mosaic) -> tuple[int, int]:
    """Smallest positive row shift p and column shift q fixing the mosaic."""
    m, n = mosaic.rows, mosaic.cols
    p = next(x for x in range(1, m + 1) if rotate(mosaic, Shift(x, 0)) == mosaic)
    q = next(y for y in range(1, n + 1) if rotate(mosaic, Shift(0, y)) == mosaic)
    return p, q


# text format -------------------------------------------------------------

def format_mosaic(mosaic: Mosaic) -> str:
    lines = [f"{mosaic.rows} {mosaic.cols}"]
    lines += [" ".join(str(t) for t in mosaic.row(i)) for i in range(mosaic.rows)]
    return "\n".join(lines) + "\n"


def parse_mosaic(text: str) -> Mosaic:
    lines = [ln.split() for ln in text.strip().splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise MosaicError("first line must be 'm n'")
    m, n = (int(v) for v in lines[0])
    body = lines[1:]
    if len(body) != m or any(len(r) != n for r in body):
        raise MosaicError(f"expected {m} rows of {n} tile ids")
    return Mosaic(m, n, tuple(int(v) for r in body for v in r))


def render_ascii(mosaic: Mosaic) -> str:
    out = []
    for i in range(mosaic.rows):
        out.append("".join(TILES[t].glyph for t in mosaic.row(i)))
    return "\n".join(out)
