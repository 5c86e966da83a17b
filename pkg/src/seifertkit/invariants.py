"""Conway/Alexander polynomials, infinite-cyclic-cover linking pairings and
their Taylor expansions, computed from :class:`SeifertData`.

Band curves are indexed ``1..m`` as ``J_1..J_m``.  Series are in
``u = t - 1``.
"""

from __future__ import annotations

from .arith import (
    ConwayPoly,
    LaurentPoly,
    Matrix,
    RationalFunction,
    TruncatedSeries,
    adjugate,
    det,
    series_of_ratfunc,
    to_conway_basis,
    z_in_s,
)
from .report import VerificationReport
from .seifert import (
    SeifertData,
    alexander_matrix,
    as_row,
    check_knot_matrix,
    full_seifert_matrix,
    intersection_P,
)

__all__ = [
    "potential_function",
    "knot_potential",
    "alexander_polynomial",
    "conway_link",
    "conway_knot",
    "pairing_matrix",
    "pairing",
    "alpha",
    "alpha_matrix",
    "alpha_matrices",
    "taylor_pairing",
    "eta_function",
    "verify_factorization",
    "verify_taylor_alpha",
    "verify_inverse_series",
    "leading_coefficient_check",
    "verify_unit_invariance",
    "verify_eta_cochran",
]


def _symmetrized(Mo: Matrix) -> Matrix:
    # s * Mo - s^-1 * Mo^T
    s = LaurentPoly.gen("s")
    si = LaurentPoly.monomial(-1, 1, "s")
    n = Mo.nrows
    return Matrix([[s * Mo[i, j] - si * Mo[j, i] for j in range(n)] for i in range(n)], n)


def _as_s(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x, "s")


def _as_t(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x, "t")


def potential_function(d: SeifertData) -> LaurentPoly:
    """``det(s M_Omega - s^-1 M_Omega^T)`` with ``s = sqrt(t)``."""
    return _as_s(det(_symmetrized(full_seifert_matrix(d))))


def knot_potential(M: Matrix) -> LaurentPoly:
    """``det(s M - s^-1 M^T)`` for the knot ``K`` obtained by cutting the bands."""
    return _as_s(det(_symmetrized(M)))


def alexander_polynomial(M: Matrix) -> LaurentPoly:
    """``det(t M - M^T)``; equals 1 at ``t = 1`` for a symplectic basis."""
    return _as_t(det(alexander_matrix(M)))


def conway_link(d: SeifertData) -> ConwayPoly:
    return to_conway_basis(potential_function(d))


def conway_knot(M) -> ConwayPoly:
    """Conway polynomial of the knot with Seifert matrix ``M``.

    Raises ``ArithmeticError`` if the constant term is not +-1, which would
    mean the determinant or the basis conversion is wrong.
    """
    M = check_knot_matrix(M)
    nabla = to_conway_basis(knot_potential(M))
    if abs(nabla.coeff(0)) != 1:
        raise ArithmeticError(f"nabla_K(0) = {nabla.coeff(0)}, expected +-1")
    return nabla


def _inverse_parts(M: Matrix) -> tuple[Matrix, LaurentPoly]:
    T = alexander_matrix(M)
    return adjugate(T), _as_t(det(T))


def _bilinear(u: Matrix, B: Matrix, w: Matrix):
    # u B w^T for row vectors u, w
    return (u @ B @ w.T)[0, 0]


def pairing_matrix(d: SeifertData) -> Matrix:
    """``p_ij = A_ij + (1 - t) V_i (tM - M^T)^-1 V_j^T`` as rational functions.

    The inverse is taken as ``adjugate / det`` so every entry has denominator
    ``det(tM - M^T)``.
    """
    adj, D = _inverse_parts(d.M)
    one_minus_t = LaurentPoly({0: 1, 1: -1}, "t")
    rows = []
    for i in range(d.m):
        Vi = d.V.row(i)
        row = []
        for j in range(d.m):
            num = d.A[i, j] * D
            if d.g:
                num = num + one_minus_t * _as_t(_bilinear(Vi, adj, d.V.row(j)))
            row.append(RationalFunction(num, D))
        rows.append(row)
    return Matrix(rows, d.m)


def pairing(d: SeifertData, i: int, j: int) -> RationalFunction:
    _check_index(d, i, j)
    return pairing_matrix(d)[i - 1, j - 1]


def _check_index(d: SeifertData, *idx: int):
    for k in idx:
        if not 1 <= k <= d.m:
            raise IndexError(f"band index {k} outside 1..{d.m}")


def alpha_matrices(d: SeifertData, count: int) -> list[Matrix]:
    """``[alpha^0, ..., alpha^{count-1}]`` as ``m x m`` integer matrices.

    ``alpha^0 = A`` and ``alpha^n = V (PM)^{n-1} P V^T`` for ``n >= 1``.
    """
    out = [d.A] if count > 0 else []
    PM = d.P @ d.M
    Q = d.P
    for _ in range(1, count):
        out.append(d.V @ Q @ d.V.T)
        Q = PM @ Q
    return out


def alpha_matrix(d: SeifertData, n: int) -> Matrix:
    if n < 0:
        raise ValueError("alpha^n needs n >= 0")
    return alpha_matrices(d, n + 1)[n]


def alpha(d: SeifertData, n: int, i: int, j: int) -> int:
    _check_index(d, i, j)
    return alpha_matrix(d, n)[i - 1, j - 1]


def _assert_integral(series: TruncatedSeries, what: str) -> TruncatedSeries:
    if not series.is_integral():
        raise ArithmeticError(f"non-integral Taylor coefficients for {what}: {series}")
    return series


def taylor_pairing(d: SeifertData, i: int, j: int, order: int) -> TruncatedSeries:
    """Expansion of ``p_ij`` in ``u = t - 1`` modulo ``u^order``."""
    p = pairing(d, i, j)
    return _assert_integral(series_of_ratfunc(p, order), f"p_{i}{j}")


def eta_function(M, V_J) -> RationalFunction:
    """``(1 - t) V_J (tM - M^T)^-1 V_J^T`` for a band curve with a zero-linking parallel."""
    M = check_knot_matrix(M)
    V = as_row(V_J)
    if V.ncols != M.nrows:
        raise ValueError(f"V_J has length {V.ncols}, expected {M.nrows}")
    if M.nrows == 0:
        return RationalFunction(0, 1, "t")
    adj, D = _inverse_parts(M)
    one_minus_t = LaurentPoly({0: 1, 1: -1}, "t")
    return RationalFunction(one_minus_t * _as_t(_bilinear(V, adj, V)), D)


# -- verification -----------------------------------------------------------


def verify_factorization(d: SeifertData) -> VerificationReport:
    """Check ``Delta_L = (s - s^-1)^m Delta_K det(p_ij)`` by cross-multiplication in ``s``."""
    rep = VerificationReport("factorization")
    delta_L = potential_function(d)
    delta_K = knot_potential(d.M)
    dp = det(pairing_matrix(d))
    if not isinstance(dp, RationalFunction):
        dp = RationalFunction(_as_t(dp), 1)
    num_s, den_s = dp.num.inflate(2, "s"), dp.den.inflate(2, "s")
    lhs = delta_L * den_s
    rhs = z_in_s() ** d.m * delta_K * num_s
    rep.add("factorization", lhs == rhs, note=f"m={d.m}, g={d.g}",
            lhs=f"Delta_L * den = {lhs}", rhs=f"(s - s^-1)^m * Delta_K * num = {rhs}")
    return rep


def verify_taylor_alpha(d: SeifertData, order: int) -> VerificationReport:
    """Compare each ``p_ij`` series with ``sum (-1)^k alpha^k u^k``."""
    rep = VerificationReport("taylor-alpha")
    pm = pairing_matrix(d)
    alphas = alpha_matrices(d, order)
    for i in range(d.m):
        for j in range(d.m):
            series = series_of_ratfunc(pm[i, j], order)
            expected = TruncatedSeries([(-1) ** k * alphas[k][i, j] for k in range(order)], order)
            name = f"taylor_{i + 1}_{j + 1}"
            ok = series == expected and series.is_integral()
            rep.add(name, ok, lhs=series, rhs=expected)
    return rep


def verify_inverse_series(M, order: int) -> VerificationReport:
    """Check ``(tM - M^T) sum_{n<N} (1-t)^n (PM)^n P = I mod (t-1)^N``.

    Written in ``u = t - 1`` the left factor is ``-P + u M`` and the sum is
    ``sum (-u)^n (PM)^n P``, so the product's ``u^k`` coefficient is
    ``-P S_k + M S_{k-1}`` with integer matrices ``S_k``.
    """
    M = check_knot_matrix(M)
    rep = VerificationReport("inverse-series")
    n = M.nrows
    P = intersection_P(n // 2)
    PM = P @ M
    S = []
    Q = P
    for k in range(order):
        S.append(Q if k % 2 == 0 else -Q)
        Q = PM @ Q
    I = Matrix.identity(n)
    Z = Matrix.zeros(n, n)
    bad = None
    for k in range(order):
        E = -P @ S[k]
        if k:
            E = E + M @ S[k - 1]
        if E != (I if k == 0 else Z):
            bad = (k, E)
            break
    if bad is None:
        rep.add("inverse_series", True, note=f"size {n}, mod u^{order}")
    else:
        rep.add("inverse_series", False, coefficient=f"u^{bad[0]}", value=bad[1])
    return rep


def leading_coefficient_check(d: SeifertData) -> VerificationReport:
    """First non-vanishing coefficient of ``nabla_L`` from the ``alpha`` invariants.

    ``n*`` is the least ``n`` with ``alpha^n != 0``; then ``nabla_L`` is
    divisible by ``z^{m(n*+1)}`` with that coefficient equal to
    ``det((-1)^{n*} alpha^{n*})``.  ``n* = 0`` is the statement that the
    ``z^m`` coefficient is ``det(A)``.
    """
    rep = VerificationReport("leading-coefficient")
    nabla = conway_link(d)
    m = d.m

    low = {k: nabla.coeff(k) for k in range(m) if nabla.coeff(k)}
    rep.add("vanishing_below_m", not low, lhs=f"nonzero low coefficients {low}", rhs="none")
    lowest = det(d.A)
    rep.add("lowest_coefficient", nabla.coeff(m) == lowest,
            lhs=f"coeff z^{m} = {nabla.coeff(m)}", rhs=f"det(A) = {lowest}")

    bound = 2 * d.g + 1
    alphas = alpha_matrices(d, bound + 1)
    n_star = next((n for n, a in enumerate(alphas) if not a.is_zero()), None)
    if n_star is None:
        rep.add("degenerate", nabla.is_zero(), note="all alpha^n vanish",
                lhs=f"nabla_L = {nabla}", rhs="0")
        return rep
    k0 = m * (n_star + 1)
    low = {k: nabla.coeff(k) for k in range(k0) if nabla.coeff(k)}
    rep.add("divisibility", not low, note=f"n*={n_star}, z^{k0}",
            lhs=f"nonzero coefficients below z^{k0}: {low}", rhs="none")
    sign = -1 if n_star % 2 else 1
    expected = det(alphas[n_star].scale(sign))
    rep.add("leading", nabla.coeff(k0) == expected, note=f"coeff z^{k0} = {expected}",
            lhs=f"coeff z^{k0} = {nabla.coeff(k0)}",
            rhs=f"det((-1)^{n_star} alpha^{n_star}) = {expected}")
    return rep


def verify_unit_invariance(d: SeifertData, order: int, shifts=range(-2, 3)) -> VerificationReport:
    """Multiplying a pairing by a unit ``t^k`` leaves its first non-vanishing
    Taylor coefficient unchanged, and rescaling numerator and denominator
    together leaves the whole series unchanged."""
    rep = VerificationReport("unit-invariance")
    pm = pairing_matrix(d)
    for i in range(d.m):
        for j in range(d.m):
            p = pm[i, j]
            base = series_of_ratfunc(p, order)
            v = base.valuation()
            for k in shifts:
                same = series_of_ratfunc(p.scale_both(k), order)
                rep.add(f"rescale_{i + 1}_{j + 1}_{k}", same == base, lhs=same, rhs=base)
                moved = series_of_ratfunc(RationalFunction(p.num.shift(k), p.den), order)
                if v is None:
                    ok = moved.valuation() is None
                else:
                    ok = moved.valuation() == v and moved[v] == base[v]
                rep.add(f"first_coeff_{i + 1}_{j + 1}_{k}", ok, lhs=moved, rhs=base)
    return rep


def derived_self_linking(M: Matrix, V_J, K: int) -> list[int]:
    """``[c_k M c_k^T for k = 1..K]`` with ``c_k = V_J (PM)^{k-1} P``."""
    M = check_knot_matrix(M)
    V = as_row(V_J)
    P = intersection_P(M.nrows // 2)
    PM = P @ M
    out = []
    Q = P
    for _ in range(K):
        c = V @ Q
        out.append(_bilinear(c, M, c))
        Q = PM @ Q
    return out


def verify_eta_cochran(M, V_J, K: int, order: int | None = None) -> VerificationReport:
    """Check ``eta(t) = sum_{k<=K} lk(J^(k)+, J^(k)) x^k`` with
    ``x = (t - 1)(t^-1 - 1)``, modulo ``u^order`` (default ``2K + 1``)."""
    order = 2 * K + 1 if order is None else order
    if order > 2 * K + 2:
        raise ValueError(f"order {order} exceeds 2K+2; x^(K+1) terms would be needed")
    rep = VerificationReport("eta-expansion")
    lhs = series_of_ratfunc(eta_function(M, V_J), order)
    u = TruncatedSeries.u(order)
    x = -(u * u) * (1 + u).inverse()
    rhs = TruncatedSeries([], order)
    xk = TruncatedSeries.const(1, order)
    ells = derived_self_linking(M, V_J, K)
    for ell in ells:
        xk = xk * x
        rhs = rhs + xk * ell
    rep.add("eta_expansion", lhs == rhs, note=f"K={K}, mod u^{order}", lhs=lhs, rhs=rhs,
            coefficients=ells)
    return rep
