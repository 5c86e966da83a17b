"""Polynomials in ``z`` and the change of basis ``z = s - s^-1``."""

from __future__ import annotations

from typing import Mapping

from .laurent import LaurentPoly, render_terms

__all__ = ["ConwayPoly", "to_conway_basis", "z_in_s"]


def z_in_s() -> LaurentPoly:
    """``s - s^-1`` as a Laurent polynomial in ``s``."""
    return LaurentPoly({1: 1, -1: -1}, "s")


class ConwayPoly:
    """Immutable integer polynomial in ``z``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError("ConwayPoly exponents must be non-negative")
            v = c.get(e, 0) + int(v)
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._c = dict(sorted(c.items()))

    @classmethod
    def z(cls) -> "ConwayPoly":
        return cls({1: 1})

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def terms(self) -> list[tuple[int, int]]:
        return list(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def _coerce(self, other):
        if isinstance(other, ConwayPoly):
            return other
        if isinstance(other, int):
            return ConwayPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return ConwayPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ConwayPoly({e: -v for e, v in self._c.items()})

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
        out: dict[int, int] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return ConwayPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ConwayPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule at any ring element ``x``."""
        if not self._c:
            return 0
        result = 0
        for k in range(self.degree, -1, -1):
            result = result * x + self._c.get(k, 0)
        return result

    def in_s(self) -> LaurentPoly:
        """Substitute ``z = s - s^-1``."""
        return LaurentPoly.const(0, "s") + self(z_in_s())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        return f"ConwayPoly({self._c})"

    def __str__(self):
        return render_terms(self._c.items(), "z")


def to_conway_basis(f: LaurentPoly) -> ConwayPoly:
    """Rewrite ``f(s)`` as ``g(s - s^-1)``.

    Peels off the top-degree term against ``(s - s^-1)^d``, whose leading
    term is ``s^d``.  Raises ``ValueError`` if a remainder is left, i.e. when
    ``f`` is not a polynomial in ``s - s^-1``.
    """
    if f.var != "s":
        raise ValueError(f"expected a Laurent polynomial in s, got {f.var!r}")
    z = z_in_s()
    rest = f
    out: dict[int, int] = {}
    while not rest.is_zero():
        d = rest.degree
        if d < 0:
            break
        c = rest.coeff(d)
        out[d] = c
        rest = rest - c * z ** d
    if not rest.is_zero():
        raise ValueError(f"{f} is not a polynomial in s - s^-1 (remainder {rest})")
    return ConwayPoly(out)
