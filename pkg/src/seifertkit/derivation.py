"""Homological derivation of curves relative to a knot's Seifert surface
and the ``beta^{k,l}`` invariants.

Classes on the surface are integer row vectors over ``p_1..p_g, q_1..q_g``.
A curve off the surface is described by its linking vector
``(lk(J, p_1), ..., lk(J, q_g))``.
"""

from __future__ import annotations

from .arith import Matrix
from .invariants import alpha_matrices
from .report import VerificationReport
from .seifert import SeifertData, as_row, check_knot_matrix, intersection_P

__all__ = [
    "derive_class",
    "pushoff_linking_vector",
    "iterated_derivative",
    "iterated_derivative_recursive",
    "beta",
    "beta_via_derivatives",
    "verify_beta_reduction",
    "verify_beta_two_path",
    "alpha_equals_beta_check",
]


def derive_class(V_L, g: int | None = None) -> Matrix:
    """Class of ``F_L n F``: ``sum lk(L, q_i) p_i - lk(L, p_i) q_i = V_L P``."""
    V = as_row(V_L)
    if g is None:
        if V.ncols % 2:
            raise ValueError(f"linking vector of odd length {V.ncols}")
        g = V.ncols // 2
    if V.ncols != 2 * g:
        raise ValueError(f"linking vector has length {V.ncols}, expected {2 * g}")
    return V @ intersection_P(g)


def pushoff_linking_vector(c, M: Matrix, sign: int = +1) -> Matrix:
    """Linking vector of the class ``c`` pushed off ``F``.

    ``lk(c^+, x) = c M x^T`` and ``lk(c^-, x) = c M^T x^T``.
    """
    c = as_row(c)
    if c.ncols != M.nrows:
        raise ValueError(f"class has length {c.ncols}, expected {M.nrows}")
    if sign > 0:
        return c @ M
    if sign < 0:
        return c @ M.T
    raise ValueError("sign must be +1 or -1")


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def iterated_derivative(M, V_J, n: int, sign: int = +1) -> Matrix:
    """``V_J (PM)^{n-1} P`` (positive) or ``V_J (PM^T)^{n-1} P`` (negative)."""
    if n < 1:
        raise ValueError("derivatives are defined for n >= 1")
    _check_sign(sign)
    M = check_knot_matrix(M)
    P = intersection_P(M.nrows // 2)
    step = P @ (M if sign > 0 else M.T)
    V = as_row(V_J)
    return V @ (step ** (n - 1)) @ P


def iterated_derivative_recursive(M, V_J, n: int, sign: int = +1) -> Matrix:
    """Same class as :func:`iterated_derivative`, built as ``D(D^{n-1}(J)^+-)``."""
    if n < 1:
        raise ValueError("derivatives are defined for n >= 1")
    _check_sign(sign)
    M = check_knot_matrix(M)
    g = M.nrows // 2
    c = derive_class(V_J, g)
    for _ in range(n - 1):
        c = derive_class(pushoff_linking_vector(c, M, sign), g)
    return c


def _unpack(d_or_M, V_1=None, V_2=None, lk12=None, i: int = 1, j: int = 2):
    if isinstance(d_or_M, SeifertData):
        d = d_or_M
        return d.M, d.V_row(i), d.V_row(j), d.A[i - 1, j - 1]
    return check_knot_matrix(d_or_M), as_row(V_1), as_row(V_2), lk12


def beta(d_or_M, k: int, l: int, V_1=None, V_2=None, lk12: int | None = None,
         i: int = 1, j: int = 2) -> int:
    """``beta^{k,l}(J_1, J_2) = (-1)^l V_1 (PM)^{k+l-1} P V_2^T`` for ``k >= 1``.

    ``beta^{0,0}`` is ``lk(J_1, J_2)``, which must be supplied (taken from
    ``A`` when called with :class:`SeifertData`).  ``beta^{0,l}`` with
    ``l >= 1`` is not defined and raises ``ValueError``.
    """
    M, V1, V2, lk = _unpack(d_or_M, V_1, V_2, lk12, i, j)
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    if k == 0:
        if l:
            raise ValueError("beta^{0,l} with l >= 1 is not defined")
        if lk is None:
            raise ValueError("beta^{0,0} needs the linking number lk12")
        return lk
    P = intersection_P(M.nrows // 2)
    val = (V1 @ ((P @ M) ** (k + l - 1)) @ P @ V2.T)[0, 0]
    return -val if l % 2 else val


def beta_via_derivatives(d_or_M, k: int, l: int, V_1=None, V_2=None,
                         lk12: int | None = None, i: int = 1, j: int = 2) -> int:
    """``lk(J_1^{(k)+}, J_2^{(l-bar)-})`` evaluated through the recursion
    ``D^n = D((D^{n-1})^+-)`` and the Seifert pairing, without the closed form."""
    M, V1, V2, lk = _unpack(d_or_M, V_1, V_2, lk12, i, j)
    if k == 0:
        if l:
            raise ValueError("beta^{0,l} with l >= 1 is not defined")
        return lk
    c1 = iterated_derivative_recursive(M, V1, k, +1)
    if l == 0:
        # lk(c^+, J_2) pairs the class with J_2's linking vector
        return (c1 @ V2.T)[0, 0]
    c2 = iterated_derivative_recursive(M, V2, l, -1)
    return (pushoff_linking_vector(c1, M, +1) @ c2.T)[0, 0]


def verify_beta_reduction(M, V_1, V_2, k_max: int, l_max: int) -> VerificationReport:
    """``beta^{k,l} = (-1)^l beta^{k+l,0}`` for ``1 <= k <= k_max, 0 <= l <= l_max``."""
    rep = VerificationReport("beta-reduction")
    bad = []
    for k in range(1, k_max + 1):
        for l in range(l_max + 1):
            lhs = beta(M, k, l, V_1, V_2)
            rhs = (-1) ** l * beta(M, k + l, 0, V_1, V_2)
            if lhs != rhs:
                bad.append((k, l, lhs, rhs))
    rep.add("beta_reduction", not bad, note=f"k<={k_max}, l<={l_max}",
            mismatches=bad[:5] or "none")
    return rep


def verify_beta_two_path(M, V_1, V_2, k_max: int, l_max: int) -> VerificationReport:
    """Closed-form ``beta`` against the derive/push-off recursion."""
    rep = VerificationReport("beta-two-path")
    bad = []
    for k in range(1, k_max + 1):
        for l in range(l_max + 1):
            a = beta(M, k, l, V_1, V_2)
            b = beta_via_derivatives(M, k, l, V_1, V_2)
            if a != b:
                bad.append((k, l, a, b))
    rep.add("beta_two_path", not bad, note=f"k<={k_max}, l<={l_max}",
            mismatches=bad[:5] or "none")
    return rep


def alpha_equals_beta_check(M, V_1, V_2, A_12: int, order: int) -> VerificationReport:
    """``alpha^n = beta^{n,0}`` for ``0 <= n < order`` (``alpha^0 = A_12``)."""
    M = check_knot_matrix(M)
    V1, V2 = as_row(V_1), as_row(V_2)
    d = SeifertData(M.nrows // 2, 2, M, Matrix(V1.rows + V2.rows, M.nrows),
                    Matrix([[0, A_12], [A_12, 0]], 2))
    alphas = alpha_matrices(d, order)
    rep = VerificationReport("alpha-beta")
    bad = []
    for n in range(order):
        a = alphas[n][0, 1]
        b = beta(M, n, 0, V1, V2, lk12=A_12)
        if a != b:
            bad.append((n, a, b))
    rep.add("alpha_equals_beta", not bad, note=f"n<{order}", mismatches=bad or "none")
    return rep
