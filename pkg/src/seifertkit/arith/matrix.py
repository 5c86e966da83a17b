"""Small dense matrices over exact rings.

Entries may be ``int``, ``Fraction``, :class:`LaurentPoly`,
:class:`RationalFunction` or :class:`TruncatedSeries`; Python ints act as
the scalars 0 and 1 of each ring.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Sequence

from .laurent import LaurentPoly
from .ratfunc import RationalFunction

__all__ = ["Matrix", "det", "det_cofactor", "det_leibniz", "adjugate", "bareiss"]


class Matrix:
    """Immutable rectangular matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError(f"ragged rows: widths {sorted(widths)}")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
            ncols = width
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols if ncols is not None else 0

    @classmethod
    def zeros(cls, nrows: int, ncols: int, zero=0) -> "Matrix":
        return cls([[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble ``[[A, B], [C, D]]``-style block matrices.  Empty blocks
        must still carry the right row/column counts."""
        rows = []
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise ValueError("block row heights differ")
            for i in range(h):
                rows.append([x for b in brow for x in b.rows[i]])
        ncols = sum(b.ncols for b in blocks[0]) if blocks else 0
        return cls(rows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> "Matrix":
        return Matrix([self.rows[i]], self.ncols)

    def col(self, j: int) -> "Matrix":
        return Matrix([[r[j]] for r in self.rows], 1)

    @property
    def T(self) -> "Matrix":
        if not self.nrows:
            return Matrix([() for _ in range(self.ncols)], 0)
        return Matrix(zip(*self.rows), self.nrows)

    def transpose(self) -> "Matrix":
        return self.T

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows], self.ncols)

    def minor(self, i: int, j: int) -> "Matrix":
        """Delete row ``i`` and column ``j``."""
        return Matrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i],
                      self.ncols - 1)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.map(lambda x: x * c)

    def __rmul__(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            new = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return Matrix(out, other.ncols)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("matrix power needs a square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        if isinstance(a, int):
            a = LaurentPoly.const(a, b.var)
        return a.exquo(b)
    return a / b


def bareiss(rows: list[list], div: Callable = _exact_div):
    """Fraction-free Gaussian elimination on a square list-of-lists.

    Returns the determinant.  ``div`` must be exact division in the ring.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = piv * a[i][j] - aik * a[k][j]
                a[i][j] = div(num, prev) if prev != 1 else num
            a[i][k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _laurent_det(m: Matrix):
    # clear the lowest power of the variable row by row so Bareiss runs on
    # ordinary polynomials
    var = next(x.var for r in m.rows for x in r if isinstance(x, LaurentPoly))
    rows = []
    total_shift = 0
    for r in m.rows:
        polys = [x if isinstance(x, LaurentPoly) else LaurentPoly.const(x, var) for x in r]
        nz = [p.valuation for p in polys if not p.is_zero()]
        k = -min(nz) if nz else 0
        total_shift += k
        rows.append([p.shift(k) for p in polys])
    d = bareiss(rows)
    if isinstance(d, int):
        d = LaurentPoly.const(d, var)
    return d.shift(-total_shift)


def _ratfunc_det(m: Matrix):
    # scale each row by the product of its distinct denominators, then take
    # a polynomial determinant
    var = next(x.var for r in m.rows for x in r if isinstance(x, RationalFunction))
    rows = []
    scale = LaurentPoly.const(1, var)
    for r in m.rows:
        fs = [x if isinstance(x, RationalFunction) else RationalFunction(x, 1, var) for x in r]
        dens: list[LaurentPoly] = []
        for f in fs:
            if not f.is_zero() and all(f.den != d for d in dens):
                dens.append(f.den)
        row_scale = LaurentPoly.const(1, var)
        for d in dens:
            row_scale = row_scale * d
        new = []
        for f in fs:
            if f.is_zero():
                new.append(LaurentPoly.const(0, var))
            else:
                new.append((f.num * row_scale).exquo(f.den))
        rows.append(new)
        scale = scale * row_scale
    return RationalFunction(_laurent_det(Matrix(rows, m.ncols)), scale)


def det(m: Matrix):
    """Exact determinant.  ``det`` of the 0x0 matrix is 1."""
    if not m.is_square():
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    if m.nrows == 0:
        return 1
    kinds = {type(x) for r in m.rows for x in r}
    if RationalFunction in kinds:
        return _ratfunc_det(m)
    if LaurentPoly in kinds:
        return _laurent_det(m)
    return bareiss(m.tolist())


def det_cofactor(m: Matrix):
    """Determinant by Laplace expansion along the first row (small sizes)."""
    if not m.is_square():
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    for j in range(n):
        a = m[0, j]
        if a == 0:
            continue
        term = a * det_cofactor(m.minor(0, j))
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(m: Matrix):
    """Determinant as a signed sum over permutations (oracle for tiny sizes)."""
    n = m.nrows
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * m[i, perm[i]]
        total = total - term if inv % 2 else total + term
    return total


def adjugate(m: Matrix) -> Matrix:
    """Classical adjoint: ``m @ adjugate(m) == det(m) * I``."""
    if not m.is_square():
        raise ValueError(f"adjugate of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Matrix([], 0)
    if n == 1:
        return Matrix([[1]], 1)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(m.minor(i, j))
            cof[j][i] = c if (i + j) % 2 == 0 else -c
    return Matrix(cof, n)
