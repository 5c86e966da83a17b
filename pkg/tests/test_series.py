from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from seifertkit.arith import (
    LaurentPoly,
    RationalFunction,
    TruncatedSeries,
    series_of_laurent,
    series_of_ratfunc,
    taylor_shift,
)

from conftest import laurent_polys

t = LaurentPoly.gen("t")


def test_inverse_of_one_plus_u_plus_u2():
    # long division: 1/(1+u+u^2) = 1 - u + 0u^2 + u^3 + O(u^4)
    s = TruncatedSeries([1, 1, 1], 4).inverse()
    assert s.coeffs == (1, -1, 0, 1)
    assert str(s) == "1 - u + u^3 + O(u^4)"


def test_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1], 3).inverse()


def test_mixed_orders_truncate():
    a = TruncatedSeries([1, 2, 3, 4], 4)
    b = TruncatedSeries([1, 1], 2)
    assert (a * b).order == 2
    assert (a + b).coeffs == (2, 3)


def test_series_of_trefoil_pairing():
    # (1-t)^2/(t^2-t+1) at t = 1+u is u^2/(1+u+u^2)
    r = RationalFunction((1 - t) ** 2, t ** 2 - t + 1)
    assert series_of_ratfunc(r, 4).coeffs == (0, 0, 1, -1)
    assert str(series_of_ratfunc(r, 4)) == "u^2 - u^3 + O(u^4)"
    assert series_of_ratfunc(r, 10).coeffs == (0, 0, 1, -1, 0, 1, -1, 0, 1, -1)


def test_series_trivial_cases():
    assert str(series_of_ratfunc(RationalFunction(5, 1), 3)) == "5 + O(u^3)"
    assert series_of_ratfunc(RationalFunction(t - 1, 1), 3).coeffs == (0, 1, 0)
    assert str(TruncatedSeries([], 4)) == "0 + O(u^4)"


def test_series_cancels_common_factors():
    r = RationalFunction((t - 1) ** 2 * t ** -3, (t - 1) * t ** 2)
    # = (t - 1) t^-5 = u (1+u)^-5 = u - 5u^2 + 15u^3
    assert series_of_ratfunc(r, 4).coeffs == (0, 1, -5, 15)


def test_pole_at_one():
    with pytest.raises(ZeroDivisionError):
        series_of_ratfunc(RationalFunction(1, t - 1), 3)


def test_negative_power_binomials():
    # sympy: 1/t^2 at t=1+u is 1 - 2u + 3u^2 - 4u^3 + 5u^4
    assert series_of_laurent(t ** -2, 5).coeffs == (1, -2, 3, -4, 5)
    assert taylor_shift(t ** 3) == [1, 3, 3, 1]


_T, _U = sp.symbols("t u")


def _sympy_series(r: RationalFunction, n: int):
    num = sum((c * _T ** e for e, c in r.num.terms()), sp.Integer(0))
    den = sum((c * _T ** e for e, c in r.den.terms()), sp.Integer(0))
    ser = sp.series((num / den).subs(_T, 1 + _U), _U, 0, n).removeO()
    poly = sp.Poly(ser, _U)
    return tuple(Fraction(int(sp.numer(c)), int(sp.denom(c)))
                 for c in (poly.coeff_monomial(_U ** k) for k in range(n)))


@settings(max_examples=40, deadline=None)
@given(laurent_polys(coeff=3, max_terms=4), laurent_polys(coeff=3, max_terms=4))
def test_series_matches_sympy(a, b):
    if b.is_zero() or b(1) == 0:
        return
    r = RationalFunction(a, b)
    assert series_of_ratfunc(r, 6).coeffs == _sympy_series(r, 6)


@given(laurent_polys(coeff=4), laurent_polys(coeff=4))
def test_reciprocal_series(a, b):
    if a.is_zero() or b.is_zero() or a(1) == 0 or b(1) == 0:
        return
    r = RationalFunction(a, b)
    assert series_of_ratfunc(r, 7) * series_of_ratfunc(r.inverse(), 7) == 1


@given(laurent_polys(), laurent_polys())
def test_series_is_ring_homomorphism(a, b):
    n = 6
    assert series_of_laurent(a * b, n) == series_of_laurent(a, n) * series_of_laurent(b, n)
    assert series_of_laurent(a + b, n) == series_of_laurent(a, n) + series_of_laurent(b, n)
