"""Exact rings used throughout: Laurent polynomials, polynomials in z,
rational functions, truncated series in u = t - 1, and matrices over them."""

from .conway import ConwayPoly, to_conway_basis, z_in_s
from .laurent import LaurentPoly, poly_gcd
from .matrix import Matrix, adjugate, det, det_cofactor, det_leibniz
from .ratfunc import RationalFunction
from .series import TruncatedSeries, series_of_laurent, series_of_ratfunc, taylor_shift

__all__ = [
    "ConwayPoly",
    "LaurentPoly",
    "Matrix",
    "RationalFunction",
    "TruncatedSeries",
    "adjugate",
    "det",
    "det_cofactor",
    "det_leibniz",
    "poly_gcd",
    "series_of_laurent",
    "series_of_ratfunc",
    "taylor_shift",
    "to_conway_basis",
    "z_in_s",
]
