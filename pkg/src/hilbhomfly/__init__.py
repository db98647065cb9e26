"""Exact computations relating Hilbert schemes of points on plane curve singularities to HOMFLY polynomials."""

from .errors import (
    HilbHomflyError,
    NotCofinite,
    NotContained,
    NotCoprime,
    NotDivisible,
    NotRepresentable,
    NotStabilized,
    ParityError,
    TruncationTooLow,
)
from .poly import LaurentPoly, TruncSeries, ZPoly, parse_poly, render
from .semigroup import GammaModule, NumSemigroup, semigroup_from_series

__version__ = "0.1.0"
