"""Golden-table and oracle cross-checks shared by the CLI and the test suite."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import golden, oracle
from .counting import (BURNSIDE_GENERAL, KNOT, PERIOD, TOROIDAL, CountResult,
                       count_knot, count_period, count_toroidal,
                       fperiod_census, fperiod_census_prime_square,
                       is_prime, root_decimal)
from .journal import Journal

# float64 keeps 53 bits; printed rows above 2**53 may be off by a few ulps
PRINTED_FLOAT_RTOL = 2.0 ** -50


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}: expected {self.expected}, got {self.actual}"


def compute(m: int, n: int, quantity: str, method: str | None = None,
            journal: Journal | None = None, workers: int = 1) -> CountResult:
    """Count through the journal when one is given; fresh results are appended."""
    if journal is not None and method is None:
        hit = journal.lookup(m, n, quantity)
        if hit is not None:
            return hit
    if quantity == KNOT:
        result = count_knot(m, n)
    elif quantity == PERIOD:
        result = count_period(m, n)
    elif quantity == TOROIDAL:
        result = count_toroidal(m, n, method, workers)
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    if journal is not None:
        journal.append(result)
    return result


def _check(name: str, expected, actual) -> Check:
    return Check(name, str(expected), str(actual), expected == actual)


def table_checks(journal: Journal | None = None, max_diagonal: int = 8) -> list[Check]:
    checks = []
    for n in range(1, max_diagonal + 1):
        value = compute(n, n, PERIOD, journal=journal).value
        printed = golden.PERIOD_DIAGONAL_PRINTED[n]
        if value == printed:
            checks.append(_check(f"D_P({n},{n})", printed, value))
        else:
            # printed row is a float64 rendering: require exact agreement with
            # the independently confirmed integer and float-level agreement with print
            exact = golden.PERIOD_DIAGONAL_EXACT[n]
            close = abs(value - printed) <= printed * PRINTED_FLOAT_RTOL
            checks.append(Check(f"D_P({n},{n}) [printed row is a float64 rounding]",
                                f"{exact} (~{printed})", str(value),
                                value == exact and close))
        checks.append(_check(f"D_P({n},{n})^(1/{n * n})", golden.GROWTH_ROOTS[n],
                             root_decimal(value, n * n)))
    for (m, n), expected in golden.TOROIDAL.items():
        checks.append(_check(f"D_T({m},{n})", expected,
                             compute(m, n, TOROIDAL, journal=journal).value))
    return checks


ORACLE_SIZES = [(m, n) for m in range(1, 10) for n in range(1, 10) if m * n <= 9] + [(2, 4)]
KNOT_ORACLE_SIZES = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (4, 3), (3, 4),
                     (2, 5), (2, 6), (6, 2)]


def theorem_histogram(m: int, n: int) -> dict[str, int]:
    """d-values from the matrix side, keyed like the oracle histogram."""
    if m == n and is_prime(m):
        p = m
        census = fperiod_census_prime_square(p).table
        hist = {k: v for k, v in census.items() if "_" in k or "^" in k}
        hist["1,1"] = census["1,1"]
        hist[f"1,{p}"] = census[f"1,{p}"]
        hist[f"{p},1"] = census[f"{p}_(0,1)"]
        hist[f"{p},{p}"] = census[f"{p}^2"] + sum(census[f"{p}_({k},1)"] for k in range(1, p))
        return hist
    return dict(fperiod_census(m, n).table)


def oracle_checks(journal: Journal | None = None, sizes=None, knot_sizes=None) -> list[Check]:
    checks = []
    for m, n in sizes or ORACLE_SIZES:
        total, toroidal, hist, fixed, _ = oracle._period_census(m, n)
        checks.append(_check(f"oracle D_P({m},{n})", total,
                             compute(m, n, PERIOD, journal=journal).value))
        checks.append(_check(f"oracle D_T({m},{n})", toroidal,
                             compute(m, n, TOROIDAL, journal=journal).value))
        checks.append(Check(f"oracle Burnside identity ({m},{n})",
                            str(m * n * toroidal), str(sum(fixed.values())),
                            m * n * toroidal == sum(fixed.values())))
        expected = theorem_histogram(m, n)
        checks.append(_check(f"oracle f.period histogram ({m},{n})",
                             dict(sorted(expected.items())), dict(sorted(hist.items()))))
        if gcd(m, n) != 1 and not (m == n and is_prime(m)):
            burnside = count_toroidal(m, n, BURNSIDE_GENERAL).value
            checks.append(_check(f"oracle D_T({m},{n}) via Burnside engine", toroidal, burnside))
    for m, n in knot_sizes or KNOT_ORACLE_SIZES:
        checks.append(_check(f"oracle D({m},{n})", oracle.count(m, n, oracle.KNOT),
                             compute(m, n, KNOT, journal=journal).value))
    return checks
