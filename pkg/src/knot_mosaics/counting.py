"""Exact counts of knot, period and toroidal mosaics."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .mosaic import (CP_BOTTOM, CP_LEFT, CP_RIGHT, CP_TOP, N_TILES, Mosaic,
                     Shift, is_period_mosaic, rotate)
from .statematrix import (BigMatrix, build_knot_pair, build_quad, entry_sum,
                          mat_pow, shifted_trace, trace_of_power)

KNOT, PERIOD, TOROIDAL = "knot", "period", "toroidal"
QUANTITIES = (KNOT, PERIOD, TOROIDAL)

THEOREM_KNOT = "theorem-knot"
THEOREM_PERIOD = "theorem-period"
THEOREM_COPRIME = "theorem-coprime"
THEOREM_PRIME_SQUARE = "theorem-prime-square"
BURNSIDE_GENERAL = "burnside-general"
ORACLE = "oracle"
METHODS = (THEOREM_KNOT, THEOREM_PERIOD, THEOREM_COPRIME,
           THEOREM_PRIME_SQUARE, BURNSIDE_GENERAL, ORACLE)

# period (1,1)-mosaics: the blank tile, both lines and the four 4-point tiles
CONSTANT_PERIOD_MOSAICS = 7

# largest column height the explicit-search reference fix count accepts
REFERENCE_MAX_HEIGHT = 6


class InexactDivisionError(ArithmeticError):
    """An orbit-count division left a remainder; the inputs are inconsistent."""


@dataclass(frozen=True)
class CountResult:
    m: int
    n: int
    quantity: str
    value: int
    method: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("counts are nonnegative")

    def as_json(self) -> dict:
        return {"m": self.m, "n": self.n, "quantity": self.quantity,
                "method": self.method, "value": str(self.value)}


@dataclass(frozen=True)
class FPeriodCensus:
    """Period mosaics grouped by fundamental period.

    Keys are ``"p,q"`` for divisor pairs; the prime-square census uses
    ``"1,1"``, ``"1,p"``, ``"p_(k,1)"`` for 0 <= k < p and ``"p^2"``.
    """

    m: int
    n: int
    table: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, key: str) -> int:
        return self.table[key]

    @property
    def total(self) -> int:
        return sum(self.table.values())


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{what}: {num} is not divisible by {den}")
    return q


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _check_dims(m: int, n: int, low: int = 1) -> None:
    if m < low or n < low:
        raise ValueError(f"dimensions must be at least {low}, got ({m}, {n})")


# knot and period mosaics ----------------------------------------------------

def count_knot(m: int, n: int) -> CountResult:
    _check_dims(m, n, low=2)
    x, o = build_knot_pair(m - 2)
    value = 2 * entry_sum(mat_pow(x + o, n - 2))
    return CountResult(m, n, KNOT, value, THEOREM_KNOT)


def period_matrix(m: int) -> BigMatrix:
    return build_quad(m).period_column_matrix


def period_count(m: int, n: int) -> int:
    return trace_of_power(period_matrix(m), n)


def count_period(m: int, n: int) -> CountResult:
    _check_dims(m, n)
    return CountResult(m, n, PERIOD, period_count(m, n), THEOREM_PERIOD)


# co-prime toroidal ----------------------------------------------------------

def fperiod_census(m: int, n: int) -> FPeriodCensus:
    """d_{p,q} for every p | m, q | n by inclusion over divisor pairs.

    A fundamental period always divides the dimensions, so this holds for any
    (m, n); only the orbit-size argument needs co-prime dimensions.
    """
    _check_dims(m, n)
    d: dict[tuple[int, int], int] = {}
    for p in divisors(m):
        for q in divisors(n):
            smaller = sum(d[r, s] for r in divisors(p) for s in divisors(q)
                          if r * s != p * q)
            d[p, q] = period_count(p, q) - smaller
    return FPeriodCensus(m, n, {f"{p},{q}": v for (p, q), v in d.items()})


def fperiod_census_coprime(m: int, n: int) -> FPeriodCensus:
    _check_dims(m, n)
    if gcd(m, n) != 1:
        raise ValueError(f"({m}, {n}) are not co-prime")
    return fperiod_census(m, n)


def count_toroidal_coprime(m: int, n: int) -> CountResult:
    census = fperiod_census_coprime(m, n)
    total = 0
    for key, d in census.table.items():
        p, q = (int(v) for v in key.split(","))
        total += _exact_div(d, p * q, f"d_{{{p},{q}}} / {p * q}")
    return CountResult(m, n, TOROIDAL, total, THEOREM_COPRIME)


# prime-square toroidal --------------------------------------------------------

def fperiod_census_prime_square(p: int) -> FPeriodCensus:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = period_matrix(p)
    c = CONSTANT_PERIOD_MOSAICS
    d_k = [shifted_trace(a, k, p) - c for k in range(p)]
    table = {"1,1": c, f"1,{p}": d_k[0]}
    for k in range(p):
        table[f"{p}_({k},1)"] = d_k[k]
    table[f"{p}^2"] = period_count(p, p) - d_k[0] - sum(d_k) - c
    return FPeriodCensus(p, p, table)


def count_toroidal_prime_square(p: int) -> CountResult:
    census = fperiod_census_prime_square(p)
    d_free = census[f"{p}^2"]
    d_k = [census[f"{p}_({k},1)"] for k in range(p)]
    if p == 2:
        value = (_exact_div(d_free, 4, "d_{2^2} / 4")
                 + _exact_div(2 * d_k[0] + d_k[1], 2, "(2 d_{2(0,1)} + d_{2(1,1)}) / 2")
                 + CONSTANT_PERIOD_MOSAICS)
    else:
        half = sum(d_k[:(p - 1) // 2 + 1])
        value = (_exact_div(d_free, p * p, f"d_{{{p}^2}} / {p * p}")
                 + _exact_div(2 * half, p, f"2 sum d_{{{p}(k,1)}} / {p}")
                 + CONSTANT_PERIOD_MOSAICS)
    return CountResult(p, p, TOROIDAL, value, THEOREM_PRIME_SQUARE)


# orbit counting for arbitrary (m, n) --------------------------------------------

def _shift_parameters(m: int, n: int, x: int, y: int) -> tuple[int, int, int]:
    """(g, e, s) for a shift fixing a mosaic.

    Columns split into g = gcd(y, n) free representatives; each column must be
    invariant under row rotation by e; column r + g is column r rotated by s rows.
    """
    g = gcd(y, n)
    e = x * (n // g) % m
    b = pow(y // g, -1, n // g) if n // g > 1 else 0
    return g, e, x * b % m


def fix_count(m: int, n: int, shift: Shift) -> int:
    """Number of period (m, n)-mosaics M with rotate(M, shift) == M.

    Fixed mosaics are determined by g free columns whose tiles repeat with row
    period h = gcd(e, m); such columns are blocks of height h, counted by the
    height-h period matrix, so the count is a shifted trace of its g-th power.
    """
    _check_dims(m, n)
    x, y = shift.x, shift.y
    if not (0 <= x < m and 0 <= y < n):
        raise ValueError(f"shift {shift} out of range for ({m}, {n})")
    g, e, s = _shift_parameters(m, n, x, y)
    h = gcd(e, m)
    a = period_matrix(h)
    if s % h == 0:
        return trace_of_power(a, g)
    return shifted_trace(mat_pow(a, g), s % h, h)


def _fix_count_star(args):
    return fix_count(*args)


def fix_counts(m: int, n: int, workers: int = 1) -> dict[Shift, int]:
    shifts = [Shift(x, y) for x in range(m) for y in range(n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(_fix_count_star, [(m, n, s) for s in shifts]))
    else:
        values = [fix_count(m, n, s) for s in shifts]
    return dict(zip(shifts, values))


def count_toroidal_general(m: int, n: int, workers: int = 1) -> CountResult:
    _check_dims(m, n)
    total = sum(fix_counts(m, n, workers).values())
    value = _exact_div(total, m * n, f"Burnside sum for ({m}, {n})")
    return CountResult(m, n, TOROIDAL, value, BURNSIDE_GENERAL)


def count_toroidal(m: int, n: int, method: str | None = None,
                   workers: int = 1) -> CountResult:
    """Dispatch to the fastest applicable route unless ``method`` forces one."""
    if method is None:
        if gcd(m, n) == 1:
            method = THEOREM_COPRIME
        elif m == n and is_prime(m):
            method = THEOREM_PRIME_SQUARE
        else:
            method = BURNSIDE_GENERAL
    if method == THEOREM_COPRIME:
        return count_toroidal_coprime(m, n)
    if method == THEOREM_PRIME_SQUARE:
        if m != n:
            raise ValueError("the prime-square route needs m == n")
        return count_toroidal_prime_square(m)
    if method == BURNSIDE_GENERAL:
        return count_toroidal_general(m, n, workers)
    raise ValueError(f"method {method!r} cannot count toroidal mosaics")


# reference fix count by explicit search ----------------------------------------

def period_columns(m: int) -> list[tuple[int, ...]]:
    """Suitably connected single columns of height m whose top and bottom states agree."""
    out = []

    def extend(col: list[int]) -> None:
        if len(col) == m:
            if CP_BOTTOM[col[-1]] == CP_TOP[col[0]]:
                out.append(tuple(col))
            return
        for t in range(N_TILES):
            if not col or CP_TOP[t] == CP_BOTTOM[col[-1]]:
                col.append(t)
                extend(col)
                col.pop()

    extend([])
    return out


def _row_shift(col: tuple[int, ...], s: int) -> tuple[int, ...]:
    m = len(col)
    return tuple(col[(i - s) % m] for i in range(m))


def fix_count_reference(m: int, n: int, shift: Shift, limit: int = 2_000_000) -> int:
    """Ground-truth fix count: build candidates column by column and test them.

    Representatives c_0..c_{g-1} are chosen from all period columns (adjacent
    representatives must match); every other column follows from
    c_{j+y} = rowshift_x(c_j). Each materialized mosaic is accepted only if it
    is a period mosaic fixed by the rotation. Raises RuntimeError once more
    than ``limit`` candidates would be materialized.
    """
    if m > REFERENCE_MAX_HEIGHT:
        raise RuntimeError(f"reference search limited to height {REFERENCE_MAX_HEIGHT}")
    x, y = shift.x % m, shift.y % n
    g = gcd(y, n)
    cols = period_columns(m)
    left = {c: sum(CP_LEFT[t] << i for i, t in enumerate(c)) for c in cols}
    right = {c: sum(CP_RIGHT[t] << i for i, t in enumerate(c)) for c in cols}
    by_left: dict[int, list[tuple[int, ...]]] = {}
    for c in cols:
        by_left.setdefault(left[c], []).append(c)

    # position j of the column orbit reached from representative r after t steps
    placement = []
    for r in range(g):
        j, t = r, 0
        for _ in range(n // g):
            placement.append((j, r, t))
            j, t = (j + y) % n, t + 1

    shift_ = Shift(x, y)
    count = 0
    seen = 0

    def search(reps: list[tuple[int, ...]]) -> None:
        nonlocal count, seen
        if len(reps) == g:
            seen += 1
            if seen > limit:
                raise RuntimeError(f"reference search exceeded {limit} candidates")
            grid: list[tuple[int, ...] | None] = [None] * n
            for j, r, t in placement:
                grid[j] = _row_shift(reps[r], x * t)
            mosaic = Mosaic(m, n, tuple(grid[j][i] for i in range(m) for j in range(n)))
            if is_period_mosaic(mosaic) and rotate(mosaic, shift_) == mosaic:
                count += 1
            return
        pool = cols if not reps else by_left.get(right[reps[-1]], [])
        for c in pool:
            reps.append(c)
            search(reps)
            reps.pop()

    search([])
    return count


# growth of D_P(n, n) -------------------------------------------------------------

def integer_root(a: int, k: int) -> int:
    """floor(a ** (1/k)) for a >= 0, k >= 1, by Newton iteration on integers."""
    if a < 0 or k < 1:
        raise ValueError("need a >= 0 and k >= 1")
    if a < 2 or k == 1:
        return a
    r = 1 << -(-a.bit_length() // k)  # r >= true root
    while True:
        nxt = ((k - 1) * r + a // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > a:
        r -= 1
    while (r + 1) ** k <= a:
        r += 1
    return r


def root_decimal(a: int, k: int, places: int = 6) -> str:
    """a ** (1/k) rounded half-up to ``places`` decimals, from exact integer roots."""
    scaled = integer_root(a * 10 ** (k * (places + 1)), k)
    rounded = (scaled + 5) // 10
    whole, frac = divmod(rounded, 10 ** places)
    return f"{whole}.{frac:0{places}d}" if places else str(whole)


@dataclass(frozen=True)
class GrowthRow:
    n: int
    value: int
    root: str


def growth_metric(n: int, places: int = 6) -> GrowthRow:
    _check_dims(n, n)
    value = period_count(n, n)
    return GrowthRow(n, value, root_decimal(value, n * n, places))


def growth_table(max_n: int, places: int = 6) -> list[GrowthRow]:
    return [growth_metric(n, places) for n in range(1, max_n + 1)]


def submultiplicativity_ratios(max_dim: int) -> dict[tuple[int, int, int], str]:
    """D_P(m1+m2, n) / (D_P(m1, n) D_P(m2, n)) for small sizes, as decimal strings.

    Reported only; nothing is asserted about these ratios.
    """
    out = {}
    for m1, m2, n in itertools.product(range(1, max_dim + 1), repeat=3):
        if m1 <= m2 and m1 + m2 <= max_dim:
            num = period_count(m1 + m2, n)
            den = period_count(m1, n) * period_count(m2, n)
            out[m1, m2, n] = f"{num * 10 ** 6 // den / 10 ** 6:.6f}"
    return out
