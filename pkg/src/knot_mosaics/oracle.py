"""Brute-force enumeration of mosaics, used as ground truth at small sizes.

Nothing here touches state matrices; the only shared code with the counting
routes is the tile table and predicates in :mod:`knot_mosaics.mosaic`.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .mosaic import (CP_BOTTOM, CP_LEFT, CP_RIGHT, CP_TOP, N_TILES, Mosaic,
                     Shift, format_mosaic, render_ascii)

log = logging.getLogger(__name__)

KNOT, PERIOD, SUITABLY_CONNECTED = "knot", "period", "suitably-connected"
PREDICATES = (KNOT, PERIOD, SUITABLY_CONNECTED)

DEFAULT_CAP = 9
# period searches that stay fast thanks to wrap-around pruning
EXTRA_PERIOD_SIZES = frozenset({(2, 4), (4, 2), (2, 5), (5, 2)})
# knot searches are pruned by the all-x boundary
KNOT_CAP = 12


class EnumerationCapError(RuntimeError):
    pass


def check_cap(m: int, n: int, predicate: str, cap: int | None = None) -> None:
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got ({m}, {n})")
    if cap is not None:
        if m * n > cap:
            raise EnumerationCapError(f"{m}x{n} exceeds the override cap {cap}")
        if cap > max(DEFAULT_CAP, KNOT_CAP):
            log.warning("enumeration cap raised to %d; searches may be very slow", cap)
        return
    if m * n <= DEFAULT_CAP:
        return
    if predicate == PERIOD and (m, n) in EXTRA_PERIOD_SIZES:
        return
    if predicate == KNOT and m * n <= KNOT_CAP:
        return
    raise EnumerationCapError(
        f"{predicate} enumeration of {m}x{n} mosaics exceeds the default cap")


def _candidates(tile_order: Sequence[int]) -> dict[tuple, tuple[int, ...]]:
    """Tiles matching each combination of required flags (None = unconstrained)."""
    table = {}
    opts = (None, False, True)
    for lf in opts:
        for tf in opts:
            for rf in opts:
                for bf in opts:
                    table[lf, tf, rf, bf] = tuple(
                        t for t in tile_order
                        if (lf is None or CP_LEFT[t] == lf)
                        and (tf is None or CP_TOP[t] == tf)
                        and (rf is None or CP_RIGHT[t] == rf)
                        and (bf is None or CP_BOTTOM[t] == bf))
    return table


def iter_tiles(m: int, n: int, predicate: str,
               tile_order: Sequence[int] = tuple(range(N_TILES)),
               first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Row-major tile tuples of every qualifying mosaic, each exactly once.

    ``first`` pins the tile at (0, 0), which partitions the search.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    cand = _candidates(tile_order)
    knot = predicate == KNOT
    period = predicate == PERIOD
    size = m * n
    cells: list[int] = [0] * size

    def place(k: int) -> Iterator[tuple[int, ...]]:
        if k == size:
            yield tuple(cells)
            return
        i, j = divmod(k, n)
        lf = CP_RIGHT[cells[k - 1]] if j else (False if knot else None)
        tf = CP_BOTTOM[cells[k - n]] if i else (False if knot else None)
        rf = bf = None
        if j == n - 1:
            if knot:
                rf = False
            elif period:
                rf = CP_LEFT[cells[k - j]] if j else None
        if i == m - 1:
            if knot:
                bf = False
            elif period:
                bf = CP_TOP[cells[j]] if i else None
        pool = cand[lf, tf, rf, bf]
        if k == 0 and first is not None:
            pool = (first,) if first in pool else ()
        for t in pool:
            # a 1-wide or 1-tall period mosaic wraps onto the same tile
            if period and ((n == 1 and CP_LEFT[t] != CP_RIGHT[t])
                           or (m == 1 and CP_TOP[t] != CP_BOTTOM[t])):
                continue
            cells[k] = t
            yield from place(k + 1)

    yield from place(0)


def enumerate_mosaics(m: int, n: int, predicate: str,
                      cap: int | None = None) -> Iterator[Mosaic]:
    check_cap(m, n, predicate, cap)
    for tiles in iter_tiles(m, n, predicate):
        yield Mosaic(m, n, tiles)


def _count_part(args) -> int:
    m, n, predicate, first = args
    return sum(1 for _ in iter_tiles(m, n, predicate, first=first))


def count(m: int, n: int, predicate: str, cap: int | None = None,
          workers: int = 1) -> int:
    check_cap(m, n, predicate, cap)
    if workers <= 1:
        return sum(1 for _ in iter_tiles(m, n, predicate))
    parts = [(m, n, predicate, t) for t in range(N_TILES)]
    with ProcessPoolExecutor(workers) as pool:
        return sum(pool.map(_count_part, parts))


# rotations on raw tile tuples ------------------------------------------------

def rotation_maps(m: int, n: int) -> dict[Shift, tuple[int, ...]]:
    """For each shift, source positions so that rotated[k] = tiles[map[k]]."""
    out = {}
    for x in range(m):
        for y in range(n):
            out[Shift(x, y)] = tuple(((i - x) % m) * n + (j - y) % n
                                     for i in range(m) for j in range(n))
    return out


def _apply(tiles: tuple[int, ...], src: tuple[int, ...]) -> tuple[int, ...]:
    return tuple([tiles[k] for k in src])


def _fundamental_period(tiles, maps, m, n) -> tuple[int, int]:
    p = next((x for x in range(1, m) if _apply(tiles, maps[Shift(x, 0)]) == tiles), m)
    q = next((y for y in range(1, n) if _apply(tiles, maps[Shift(0, y)]) == tiles), n)
    return p, q


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass
class EnumerationReport:
    m: int
    n: int
    knot: int = 0
    period: int = 0
    toroidal: int = 0
    fperiod_histogram: dict[str, int] = field(default_factory=dict)
    fixed: dict[Shift, int] = field(default_factory=dict)

    def burnside_consistent(self) -> bool:
        return self.m * self.n * self.toroidal == sum(self.fixed.values())


@lru_cache(maxsize=32)
def _period_census(m: int, n: int, cap: int | None = None):
    check_cap(m, n, PERIOD, cap)
    maps = rotation_maps(m, n)
    shift_maps = [(s, src) for s, src in maps.items()]
    fixed = Counter()
    hist = Counter()
    classes = set()
    prime_square = m == n and _is_prime(m)
    p = m
    total = 0
    for tiles in iter_tiles(m, n, PERIOD):
        total += 1
        images = []
        for s, src in shift_maps:
            img = _apply(tiles, src)
            images.append(img)
            if img == tiles:
                fixed[s] += 1
        classes.add(min(images))
        fp = _fundamental_period(tiles, maps, m, n)
        hist[f"{fp[0]},{fp[1]}"] += 1
        if prime_square and fp != (1, 1) and fp != (1, p):
            k = next((k for k in range(p) if _apply(tiles, maps[Shift(k, 1)]) == tiles), None)
            hist[f"{p}^2" if k is None else f"{p}_({k},1)"] += 1
    for s in maps:
        fixed.setdefault(s, 0)
    return total, len(classes), dict(hist), dict(fixed), frozenset(classes)


def fperiod_histogram(m: int, n: int, cap: int | None = None) -> dict[str, int]:
    """Period mosaics counted by fundamental period ``"p,q"``.

    When m == n is prime, the mosaics that are neither (1,1)- nor (1,p)-periodic
    are also grouped by the smallest k with rotate(M, (k, 1)) == M under keys
    ``"p_(k,1)"``, the rest under ``"p^2"``.
    """
    return _period_census(m, n, cap)[2]


def count_toroidal_by_canonicalization(m: int, n: int, cap: int | None = None) -> int:
    return _period_census(m, n, cap)[1]


def report(m: int, n: int, cap: int | None = None) -> EnumerationReport:
    total, toroidal, hist, fixed, _ = _period_census(m, n, cap)
    try:
        knot = count(m, n, KNOT, cap)
    except EnumerationCapError:
        knot = None
    return EnumerationReport(m, n, knot, total, toroidal, hist, fixed)


# (2,2) catalog -------------------------------------------------------------------

@dataclass
class Catalog:
    representatives: list[Mosaic]
    orbit_sizes: dict[str, int]
    class_counts: dict[str, int]

    def reconciliation(self) -> list[str]:
        lines = []
        total = 0
        for key, count_ in self.class_counts.items():
            size = self.orbit_sizes[key]
            lines.append(f"{key}: {count_} classes x orbit size {size} = {count_ * size} mosaics")
            total += count_
        lines.append(f"total classes: {total}")
        lines.append("earlier published catalog: 98 listed - 10 duplicates + 22 missing = 110")
        return lines


def _orbit_class(tiles, maps) -> str:
    if _apply(tiles, maps[Shift(1, 0)]) == tiles and _apply(tiles, maps[Shift(0, 1)]) == tiles:
        return "1,1"
    if _apply(tiles, maps[Shift(1, 0)]) == tiles:
        return "1,2"
    if _apply(tiles, maps[Shift(0, 1)]) == tiles:
        return "2_(0,1)"
    if _apply(tiles, maps[Shift(1, 1)]) == tiles:
        return "2_(1,1)"
    return "2^2"


def catalog_toroidal_2_2() -> Catalog:
    maps = rotation_maps(2, 2)
    reps = set()
    for tiles in iter_tiles(2, 2, PERIOD):
        reps.add(min(_apply(tiles, src) for src in maps.values()))
    ordered = sorted(reps)
    counts = Counter(_orbit_class(t, maps) for t in ordered)
    sizes = {"1,1": 1, "1,2": 2, "2_(0,1)": 2, "2_(1,1)": 2, "2^2": 4}
    keys = ["1,1", "1,2", "2_(0,1)", "2_(1,1)", "2^2"]
    return Catalog([Mosaic(2, 2, t) for t in ordered], sizes,
                   {k: counts.get(k, 0) for k in keys})


def format_catalog(catalog: Catalog, ascii_art: bool = True) -> str:
    blocks = []
    for idx, mos in enumerate(catalog.representatives, 1):
        block = format_mosaic(mos).rstrip("\n")
        if ascii_art:
            art = "\n".join("# " + ln for ln in render_ascii(mos).splitlines())
            block = f"# K{idx}\n{art}\n{block}"
        blocks.append(block)
    return "\n\n".join(blocks) + "\n"
