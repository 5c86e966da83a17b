"""Quotients of Laurent polynomials.

Values are kept unreduced; equality is decided by cross-multiplication and
gcd reduction happens only in :meth:`RationalFunction.normalized` (used for
display).
"""

from __future__ import annotations

from .laurent import LaurentPoly, poly_gcd

__all__ = ["RationalFunction"]


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var: str = "t"):
        if isinstance(num, int):
            num = LaurentPoly.const(num, den.var if isinstance(den, LaurentPoly) else var)
        if isinstance(den, int):
            den = LaurentPoly.const(den, num.var)
        if num.var != den.var and not num.is_zero():
            raise ValueError("variable mismatch between numerator and denominator")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num.with_var(den.var) if num.is_zero() else num
        self.den = den

    @property
    def var(self) -> str:
        return self.den.var

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, LaurentPoly)):
            return RationalFunction(other, LaurentPoly.const(1, self.var))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

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

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is up to cross-multiplication

    def inflate(self, k: int, var: str | None = None) -> "RationalFunction":
        """Substitute ``t -> s^k`` in numerator and denominator."""
        return RationalFunction(self.num.inflate(k, var), self.den.inflate(k, var))

    def scale_both(self, k: int) -> "RationalFunction":
        """Multiply numerator and denominator by ``t^k`` (same value)."""
        return RationalFunction(self.num.shift(k), self.den.shift(k))

    def normalized(self) -> "RationalFunction":
        """Reduced form: gcd removed, denominator with nonzero constant term
        and positive leading coefficient."""
        num, den = self.num, self.den
        if num.is_zero():
            return RationalFunction(num, LaurentPoly.const(1, self.var))
        g = poly_gcd(num, den)
        num, den = num.exquo(g), den.exquo(g)
        k = den.valuation
        num, den = num.shift(-k), den.shift(-k)
        if den.leading_coefficient < 0:
            num, den = -num, -den
        return RationalFunction(num, den)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        r = self.normalized()
        return f"({r.num}) / ({r.den})"
