"""Laurent polynomials in one variable with integer coefficients.

A :class:`LaurentPoly` is stored densely as a lowest exponent plus a tuple of
coefficients with nonzero first and last entries, so equal polynomials have
equal representations.  The variable tag (``"t"``, ``"s"``, ...) is part of
the value; mixing tags in arithmetic raises ``ValueError``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "poly_gcd", "render_terms"]


def _trim(low: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    start = 0
    end = len(coeffs)
    while start < end and coeffs[start] == 0:
        start += 1
    while end > start and coeffs[end - 1] == 0:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(coeffs[start:end])


def render_terms(terms: Iterable[tuple[int, int]], var: str) -> str:
    """Render ``(exponent, coefficient)`` pairs in ascending order.

    Coefficients are written explicitly (``1 - 2*t + 1*t^2``) except for a
    lone monomial with coefficient +-1, which is written bare (``z``, ``-t^3``).
    """
    terms = [(e, c) for e, c in sorted(terms) if c != 0]
    if not terms:
        return "0"

    def mono(e: int) -> str:
        if e == 1:
            return var
        return f"{var}^{e}"

    if len(terms) == 1 and abs(terms[0][1]) == 1 and terms[0][0] != 0:
        e, c = terms[0]
        return ("-" if c < 0 else "") + mono(e)

    out = []
    for idx, (e, c) in enumerate(terms):
        body = str(abs(c)) if e == 0 else f"{abs(c)}*{mono(e)}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class LaurentPoly:
    """Immutable element of ``Z[x, x^-1]``.

    >>> t = LaurentPoly.gen("t")
    >>> (t + 1) * (t - 1)
    LaurentPoly({0: -1, 2: 1}, var='t')
    """

    __slots__ = ("var", "_low", "_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "t"):
        self.var = var
        if not coeffs:
            self._low, self._coeffs = 0, ()
        else:
            lo = min(coeffs)
            hi = max(coeffs)
            dense = [0] * (hi - lo + 1)
            for e, c in coeffs.items():
                dense[e - lo] += int(c)
            self._low, self._coeffs = _trim(lo, dense)
        self._hash = None

    @classmethod
    def _from_dense(cls, low: int, coeffs: list[int], var: str) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.var = var
        obj._low, obj._coeffs = _trim(low, coeffs)
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, var: str = "t") -> "LaurentPoly":
        return cls._from_dense(1, [1], var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "t") -> "LaurentPoly":
        return cls._from_dense(exp, [coeff], var)

    @classmethod
    def const(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls._from_dense(0, [c], var)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return self._low

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return self._low + len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def coeff(self, exp: int) -> int:
        i = exp - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs, ascending."""
        return [(self._low + i, c) for i, c in enumerate(self._coeffs) if c]

    def to_dict(self) -> dict[int, int]:
        return dict(self.terms())

    def content(self) -> int:
        g = 0
        for c in self._coeffs:
            g = gcd(g, c)
        return g

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, int):
            return LaurentPoly._from_dense(0, [other], self.var)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._low, other._low)
        hi = max(self.degree, other.degree)
        dense = [0] * (hi - lo + 1)
        for i, c in enumerate(self._coeffs):
            dense[self._low - lo + i] += c
        for i, c in enumerate(other._coeffs):
            dense[other._low - lo + i] += c
        return LaurentPoly._from_dense(lo, dense, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dense(self._low, [-c for c in self._coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._from_dense(0, [], self.var)
            return LaurentPoly._from_dense(self._low, [c * other for c in self._coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LaurentPoly._from_dense(0, [], self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._from_dense(self._low + other._low, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._coeffs) == 1 and abs(self._coeffs[0]) == 1:
                return LaurentPoly._from_dense(self._low * n, [self._coeffs[0] ** (-n)], self.var)
            raise ValueError("only units of Z[x, x^-1] have negative powers")
        result = LaurentPoly._from_dense(0, [1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x^k``."""
        return LaurentPoly._from_dense(self._low + k, list(self._coeffs), self.var)

    def exquo(self, other) -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by non-polynomial")
        if not other._coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._coeffs:
            return self
        b = other._coeffs
        db, lb = other.degree, other._low
        min_q = self._low - lb
        rem = list(self._coeffs)
        rlow = self._low
        q: dict[int, int] = {}
        top = len(rem) - 1
        while True:
            while top >= 0 and rem[top] == 0:
                top -= 1
            if top < 0:
                break
            e = rlow + top - db
            if e < min_q:
                raise ArithmeticError(f"{other} does not divide {self}")
            c, r = divmod(rem[top], b[-1])
            if r:
                raise ArithmeticError(f"{other} does not divide {self}")
            q[e] = c
            # subtract c * x^e * other
            off = e + lb - rlow
            for j, bj in enumerate(b):
                rem[off + j] -= c * bj
        return LaurentPoly(q, self.var)

    # -- substitution --------------------------------------------------------

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction, or any ring element with ``**``)."""
        result = 0
        for e, c in self.terms():
            if e < 0 and isinstance(x, int):
                result = result + c * Fraction(1, x ** -e)
            else:
                result = result + c * (x ** e)
        return result

    def evaluate(self, x):
        return self(x)

    def inflate(self, k: int, var: str | None = None) -> "LaurentPoly":
        """Substitute ``x -> y^k``; e.g. ``inflate(2, 's')`` maps t to s^2."""
        return LaurentPoly({e * k: c for e, c in self.terms()}, var or self.var)

    def reflect(self) -> "LaurentPoly":
        """Substitute ``x -> x^-1``."""
        return LaurentPoly({-e: c for e, c in self.terms()}, self.var)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly._from_dense(self._low, list(self._coeffs), var)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self._coeffs
            return self._low == 0 and self._coeffs == (other,)
        if isinstance(other, LaurentPoly):
            return (self.var == other.var and self._low == other._low
                    and self._coeffs == other._coeffs) or (
                        not self._coeffs and not other._coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if len(self._coeffs) <= 1 and self._low == 0:
                self._hash = hash(self._coeffs[0] if self._coeffs else 0)
            else:
                self._hash = hash((self.var, self._low, self._coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_dict()}, var={self.var!r})"

    def __str__(self) -> str:
        return render_terms(self.terms(), self.var)


def _poly_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense ascending coefficient lists."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        lead = a[-1]
        a = [lb * x for x in a]
        for j, bj in enumerate(b):
            a[da - db + j] -= lead * bj
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, c)
    if g == 0:
        return a
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in ``Z[x, x^-1]``, up to units.

    Normalized to valuation 0 and positive leading coefficient.  Uses the
    primitive pseudo-remainder sequence.
    """
    if a.var != b.var:
        raise ValueError("variable mismatch")
    if a.is_zero():
        return _normalize_unit(b)
    if b.is_zero():
        return _normalize_unit(a)
    ca, cb = a.content(), b.content()
    x = _primitive(list(a._coeffs))
    y = _primitive(list(b._coeffs))
    if len(x) < len(y):
        x, y = y, x
    while y and len(y) > 1:
        r = _poly_prem(x, y)
        x, y = y, (_primitive(r) if r else [])
    if y:  # nonzero constant remainder: coprime
        x = [1]
    return LaurentPoly._from_dense(0, [gcd(ca, cb) * c for c in x], a.var)


def _normalize_unit(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    q = p.shift(-p.valuation)
    return -q if q.leading_coefficient < 0 else q
