"""Seifert data for a link ``K_0 u J_1 u ... u J_m`` and the matrices built from it.

The basis order is fixed everywhere as ``p_1..p_g, q_1..q_g, r_1..r_m``.
``M`` is the Seifert form on the symplectic part, ``V`` has one row per band
curve ``J_i`` (its linking numbers with the ``p`` and ``q`` curves) and ``A``
is the Seifert form restricted to the ``r`` curves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .arith import LaurentPoly, Matrix

__all__ = [
    "SeifertData",
    "SeifertValidationError",
    "intersection_P",
    "check_knot_matrix",
    "validate",
    "full_seifert_matrix",
    "alexander_matrix",
    "random_knot_matrix",
    "random_seifert_data",
]


class SeifertValidationError(ValueError):
    """Raised by :func:`validate`; ``violations`` lists every failed invariant."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class SeifertData:
    g: int
    m: int
    M: Matrix
    V: Matrix
    A: Matrix
    P: Matrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "P", intersection_P(self.g))

    def V_row(self, i: int) -> Matrix:
        """``V_{J_i}`` as a 1 x 2g matrix (``i`` is 1-based)."""
        return self.V.row(i - 1)


def intersection_P(g: int) -> Matrix:
    """The ``2g x 2g`` matrix ``[[0, -I_g], [I_g, 0]]``; ``M - M^T = -P``."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = -1
        rows[g + i][i] = 1
    return Matrix(rows, n)


def _as_matrix(x, nrows: int, ncols: int) -> Matrix:
    if isinstance(x, Matrix):
        return x
    rows = [list(r) for r in x]
    if not rows:
        return Matrix([[] for _ in range(nrows)], ncols) if ncols == 0 else Matrix([], ncols)
    return Matrix(rows)


def _knot_violations(M: Matrix, g: int) -> list[str]:
    out = []
    if M.shape != (2 * g, 2 * g):
        return [f"M has shape {M.shape}, expected {(2 * g, 2 * g)}"]
    if any(not isinstance(x, int) for r in M.rows for x in r):
        out.append("M entries must be integers")
        return out
    if M - M.T != -intersection_P(g):
        out.append("M - M^T != -P (basis is not symplectic for this Seifert form)")
    return out


def check_knot_matrix(M) -> Matrix:
    """Validate a knot Seifert matrix on a symplectic basis and return it."""
    M = M if isinstance(M, Matrix) else Matrix([list(r) for r in M])
    if M.nrows % 2 or not M.is_square():
        raise SeifertValidationError([f"M has shape {M.shape}, expected 2g x 2g"])
    errs = _knot_violations(M, M.nrows // 2)
    if errs:
        raise SeifertValidationError(errs)
    return M


def validate(g: int, m: int, M, V, A) -> SeifertData:
    """Build :class:`SeifertData`, checking shapes, ``M - M^T = -P`` and ``A = A^T``."""
    errs: list[str] = []
    if not isinstance(g, int) or g < 0:
        errs.append(f"g must be a non-negative integer, got {g!r}")
    if not isinstance(m, int) or m < 1:
        errs.append(f"m must be a positive integer, got {m!r}")
    if errs:
        raise SeifertValidationError(errs)
    try:
        M = _as_matrix(M, 2 * g, 2 * g)
        V = _as_matrix(V, m, 2 * g)
        A = _as_matrix(A, m, m)
    except ValueError as exc:
        raise SeifertValidationError([str(exc)]) from exc

    errs.extend(_knot_violations(M, g))
    if V.shape != (m, 2 * g):
        errs.append(f"V has shape {V.shape}, expected {(m, 2 * g)}")
    elif any(not isinstance(x, int) for r in V.rows for x in r):
        errs.append("V entries must be integers")
    if A.shape != (m, m):
        errs.append(f"A has shape {A.shape}, expected {(m, m)}")
    elif any(not isinstance(x, int) for r in A.rows for x in r):
        errs.append("A entries must be integers")
    elif A != A.T:
        errs.append("A is not symmetric")
    if errs:
        raise SeifertValidationError(errs)
    return SeifertData(g, m, M, V, A)


def full_seifert_matrix(d: SeifertData) -> Matrix:
    """``M_Omega = [[M, V^T], [V, A]]``."""
    return Matrix.block([[d.M, d.V.T], [d.V, d.A]])


def alexander_matrix(M: Matrix | SeifertData) -> Matrix:
    """``t M - M^T`` over ``Z[t, t^-1]``."""
    if isinstance(M, SeifertData):
        M = M.M
    t = LaurentPoly.gen("t")
    n = M.nrows
    return Matrix([[t * M[i, j] - M[j, i] for j in range(n)] for i in range(n)], n)


def random_knot_matrix(rng: random.Random, g: int, lo: int = -3, hi: int = 3) -> Matrix:
    """Random ``S + [[0, I], [0, 0]]`` with ``S`` symmetric; always symplectic."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    for i in range(g):
        rows[i][g + i] += 1
    return Matrix(rows, n)


def random_seifert_data(rng: random.Random, g: int, m: int, lo: int = -3, hi: int = 3,
                        zero_A: bool = False) -> SeifertData:
    M = random_knot_matrix(rng, g, lo, hi)
    V = Matrix([[rng.randint(lo, hi) for _ in range(2 * g)] for _ in range(m)], 2 * g)
    A = [[0] * m for _ in range(m)]
    if not zero_A:
        for i in range(m):
            for j in range(i, m):
                A[i][j] = A[j][i] = rng.randint(lo, hi)
    return validate(g, m, M, V, A)


def as_row(v: Sequence[int] | Matrix) -> Matrix:
    """Coerce a vector to a 1 x n matrix."""
    if isinstance(v, Matrix):
        if v.nrows != 1:
            raise ValueError(f"expected a row vector, got shape {v.shape}")
        return v
    v = list(v)
    return Matrix([v], len(v))
