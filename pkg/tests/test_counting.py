from math import gcd

import pytest

from knot_mosaics import oracle
from knot_mosaics.counting import (BURNSIDE_GENERAL, THEOREM_COPRIME,
                                   THEOREM_PRIME_SQUARE, CountResult,
                                   InexactDivisionError, count_knot,
                                   count_period, count_toroidal,
                                   count_toroidal_coprime,
                                   count_toroidal_general,
                                   count_toroidal_prime_square, divisors,
                                   fix_count, fix_count_reference, fix_counts,
                                   fperiod_census, fperiod_census_coprime,
                                   fperiod_census_prime_square, growth_metric,
                                   growth_table, integer_root, period_columns,
                                   period_count, root_decimal,
                                   submultiplicativity_ratios, _exact_div)
from knot_mosaics.mosaic import Mosaic, Shift, is_period_mosaic, rotate


def test_count_knot_small():
    assert count_knot(2, 2) == CountResult(2, 2, "knot", 2, "theorem-knot")


@pytest.mark.parametrize("m,n", [(3, 3), (4, 3), (2, 5), (3, 4)])
def test_count_knot_matches_oracle(m, n):
    assert count_knot(m, n).value == oracle.count(m, n, oracle.KNOT)


def test_trefoil_is_counted(trefoil):
    knots = set(oracle.iter_tiles(4, 4, oracle.KNOT))
    assert trefoil.tiles in knots
    assert len(knots) == count_knot(4, 4).value


@pytest.mark.parametrize("m,n", [(1, 2), (2, 1), (0, 3)])
def test_count_knot_rejects(m, n):
    with pytest.raises(ValueError):
        count_knot(m, n)


@pytest.mark.parametrize("m,n,value", [(1, 1, 7), (3, 3, 316249), (1, 2, 29)])
def test_count_period(m, n, value):
    assert count_period(m, n).value == value


def test_period_symmetric():
    for m in range(1, 7):
        for n in range(m + 1, 7):
            assert period_count(m, n) == period_count(n, m)


def test_census_coprime_small():
    c = fperiod_census_coprime(1, 2)
    assert c["1,1"] == 7
    assert c["1,2"] == 22 == 29 - 7
    c = fperiod_census_coprime(2, 3)
    assert c.total == period_count(2, 3)


def test_census_coprime_rejects():
    with pytest.raises(ValueError):
        fperiod_census_coprime(2, 4)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 6)
                                 if gcd(m, n) == 1])
def test_census_coprime_properties(m, n):
    c = fperiod_census_coprime(m, n)
    assert c.total == period_count(m, n)
    for key, d in c.table.items():
        p, q = map(int, key.split(","))
        assert d >= 0
        assert d % (p * q) == 0


@pytest.mark.parametrize("m,n,value", [(1, 2, 18), (2, 3, 954), (4, 5, 63440607699)])
def test_toroidal_coprime(m, n, value):
    r = count_toroidal_coprime(m, n)
    assert (r.value, r.method) == (value, THEOREM_COPRIME)


def test_prime_square_two():
    c = fperiod_census_prime_square(2)
    assert (c["2_(0,1)"], c["2_(1,1)"], c["2^2"]) == (22, 16, 292)
    assert count_toroidal_prime_square(2).value == 110


@pytest.mark.parametrize("p,value", [(3, 35237), (5, 52006454275147)])
def test_prime_square(p, value):
    r = count_toroidal_prime_square(p)
    assert (r.value, r.method) == (value, THEOREM_PRIME_SQUARE)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_square_census(p):
    c = fperiod_census_prime_square(p)
    d = [c[f"{p}_({k},1)"] for k in range(p)]
    assert all(v >= 0 for v in c.table.values())
    for k in range(1, p):
        assert d[k] == d[p - k]
    assert c[f"1,{p}"] == d[0]
    if p == 2:
        assert period_count(2, 2) == c["2^2"] + 2 * d[0] + d[1] + 7
    else:
        assert period_count(p, p) == c[f"{p}^2"] + 2 * sum(d[:(p + 1) // 2]) + 7
    assert c.total == period_count(p, p)


def test_prime_square_rejects_composite():
    with pytest.raises(ValueError):
        count_toroidal_prime_square(4)


def test_fix_count_examples():
    assert fix_count(2, 2, Shift(1, 1)) == 23
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        assert fix_count(m, n, Shift(0, 0)) == count_period(m, n).value


def test_fix_count_matches_shifted_trace():
    from knot_mosaics.statematrix import build_quad, shifted_trace
    for p in (2, 3, 5):
        a = build_quad(p).period_column_matrix
        for k in range(p):
            assert fix_count(p, p, Shift(k, 1)) == shifted_trace(a, k, p)


def test_fix_count_2_4_against_filter():
    period = [Mosaic(2, 4, t) for t in oracle.iter_tiles(2, 4, oracle.PERIOD)]
    s = Shift(1, 2)
    direct = sum(1 for mos in period if rotate(mos, s) == mos)
    assert fix_count(2, 4, s) == direct
    assert fix_count_reference(2, 4, s) == direct


def test_fix_count_rejects_bad_shift():
    with pytest.raises(ValueError):
        fix_count(2, 2, Shift(2, 0))


def test_period_columns():
    # equal top/bottom columns are counted by the sum of the period matrix entries
    from knot_mosaics.statematrix import build_quad, entry_sum
    for m in range(1, 5):
        assert len(period_columns(m)) == entry_sum(build_quad(m).period_column_matrix)


def test_fix_count_reference_sweep():
    """Fast route against explicit search on every tractable shift, m <= 4, n <= 6."""
    compared = 0
    for m in range(1, 5):
        for n in range(1, 7):
            for x in range(m):
                for y in range(n):
                    try:
                        ref = fix_count_reference(m, n, Shift(x, y), limit=20000)
                    except RuntimeError:
                        continue
                    assert ref == fix_count(m, n, Shift(x, y)), (m, n, x, y)
                    compared += 1
    assert compared >= 150


@pytest.mark.parametrize("m,n", [(1, 4), (2, 2), (2, 3), (3, 3), (2, 4), (1, 6)])
def test_fix_counts_match_oracle(m, n):
    rep = oracle.report(m, n)
    assert fix_counts(m, n) == rep.fixed


@pytest.mark.parametrize("m,n,value", [(2, 4, 11591), (4, 4, 308435024), (2, 3, 954)])
def test_toroidal_general(m, n, value):
    r = count_toroidal_general(m, n)
    assert (r.value, r.method) == (value, BURNSIDE_GENERAL)


def test_general_agrees_with_theorems():
    for m in range(1, 6):
        for n in range(1, 6):
            if gcd(m, n) == 1:
                assert count_toroidal_general(m, n).value == count_toroidal_coprime(m, n).value
    for p in (2, 3):
        assert count_toroidal_general(p, p).value == count_toroidal_prime_square(p).value


def test_burnside_identity_and_bounds():
    for m in range(1, 6):
        for n in range(1, 6):
            fixed = sum(fix_counts(m, n).values())
            t = count_toroidal(m, n).value
            assert m * n * t == fixed
            dp = period_count(m, n)
            assert dp <= m * n * t and t <= dp


def test_dispatch():
    assert count_toroidal(3, 4).method == THEOREM_COPRIME
    assert count_toroidal(3, 3).method == THEOREM_PRIME_SQUARE
    assert count_toroidal(4, 6).method == BURNSIDE_GENERAL
    assert count_toroidal(3, 3, BURNSIDE_GENERAL).value == 35237


def test_general_parallel_deterministic():
    assert count_toroidal_general(4, 4, workers=2) == count_toroidal_general(4, 4)


def test_inexact_division_aborts():
    with pytest.raises(InexactDivisionError):
        _exact_div(7, 2, "demo")


def test_general_census_2_4_matches_oracle():
    assert fperiod_census(2, 4).table == oracle.fperiod_histogram(2, 4)


# growth ---------------------------------------------------------------------

@pytest.mark.parametrize("a,k", [(0, 3), (1, 5), (7, 1), (10 ** 40, 7), (2 ** 200 - 1, 9),
                                 (316249, 9), (12345678901234567890, 2)])
def test_integer_root(a, k):
    r = integer_root(a, k)
    assert r ** k <= a < (r + 1) ** k


def test_root_decimal():
    assert root_decimal(359, 4) == "4.352849"
    assert root_decimal(7, 1) == "7.000000"
    assert root_decimal(2, 2, 3) == "1.414"
    assert root_decimal(10 ** 6 + 1, 2, 0) == "1000"


def test_growth_metric():
    assert growth_metric(2).root == "4.352849"
    assert growth_metric(5).root == "4.023091"
    roots = [float(r.root) for r in growth_table(8)]
    assert all(r >= 4 for r in roots)
    assert all(a > b for a, b in zip(roots[1:], roots[2:]))


def test_submultiplicativity_report_is_data_only():
    ratios = submultiplicativity_ratios(4)
    assert (1, 1, 1) in ratios
    assert all(isinstance(v, str) for v in ratios.values())


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
