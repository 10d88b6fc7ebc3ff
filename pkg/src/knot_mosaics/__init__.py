"""Exact enumeration of knot, period and toroidal mosaics."""

from .counting import (CountResult, FPeriodCensus, count_knot, count_period,
                       count_toroidal, count_toroidal_coprime,
                       count_toroidal_general, count_toroidal_prime_square,
                       fix_count, fperiod_census_coprime, growth_metric)
from .mosaic import (Mosaic, Shift, Tile, TILES, boundary_word, canonical_form,
                     fundamental_period, is_knot_mosaic, is_period_mosaic,
                     is_suitably_boundary_connected, is_suitably_connected,
                     rotate)

__version__ = "0.1.0"
