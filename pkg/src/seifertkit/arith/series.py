"""Truncated Taylor series around ``t = 1`` in the variable ``u = t - 1``."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .laurent import LaurentPoly, render_terms
from .ratfunc import RationalFunction

__all__ = ["TruncatedSeries", "taylor_shift", "series_of_laurent", "series_of_ratfunc"]


class TruncatedSeries:
    """``c_0 + c_1 u + ... + c_{N-1} u^{N-1} + O(u^N)`` with exact rationals.

    Binary operations between series of different orders truncate to the
    smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 1:
            raise ValueError("series order must be at least 1")
        c = [Fraction(x) for x in list(coeffs)[:order]]
        c.extend([Fraction(0)] * (order - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def u(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        inv = [Fraction(0)] * n
        inv[0] = 1 / a[0]
        for k in range(1, n):
            acc = sum((a[j] * inv[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            inv[k] = -acc * inv[0]
        return TruncatedSeries(inv, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self):
        nz = [(k, c) for k, c in enumerate(self.coeffs) if c]
        tail = f"O(u^{self.order})"
        if not nz:
            return f"0 + {tail}"
        parts = []
        for idx, (k, c) in enumerate(nz):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "u" if k == 1 else f"u^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) + " + " + tail


def taylor_shift(p: LaurentPoly) -> list[int]:
    """Exact coefficients of ``p(1 + u)`` for ``p`` with non-negative exponents."""
    if p.is_zero():
        return []
    if p.valuation < 0:
        raise ValueError("taylor_shift needs a polynomial (no negative exponents)")
    out = [0] * (p.degree + 1)
    for e, c in p.terms():
        for j in range(e + 1):
            out[j] += c * comb(e, j)
    return out


def _gen_binom(e: int, j: int) -> int:
    # binom(e, j) for any integer e
    num = 1
    for i in range(j):
        num *= e - i
    den = 1
    for i in range(1, j + 1):
        den *= i
    return num // den


def series_of_laurent(p: LaurentPoly, order: int) -> TruncatedSeries:
    """Expand a Laurent polynomial in ``t`` at ``t = 1 + u``."""
    out = [0] * order
    for e, c in p.terms():
        for j in range(order):
            out[j] += c * _gen_binom(e, j)
    return TruncatedSeries(out, order)


def series_of_ratfunc(r: RationalFunction, order: int) -> TruncatedSeries:
    """Taylor expansion of ``r`` in ``u = t - 1`` modulo ``u^order``.

    Powers of ``t`` are units at ``t = 1`` and powers of ``(t - 1)`` common to
    numerator and denominator are cancelled.  A genuine pole at ``t = 1``
    raises ``ZeroDivisionError``.
    """
    num, den = r.num, r.den
    if num.is_zero():
        return TruncatedSeries([], order)
    k = -min(num.valuation, den.valuation)
    num, den = num.shift(k), den.shift(k)
    dn, dd = taylor_shift(num), taylor_shift(den)
    vd = next(i for i, c in enumerate(dd) if c)
    vn = next(i for i, c in enumerate(dn) if c)
    if vn < vd:
        raise ZeroDivisionError(f"{r} has a pole at t = 1")
    dn, dd = dn[vd:], dd[vd:]
    return TruncatedSeries(dn, order) / TruncatedSeries(dd, order)
