import random

import pytest
from hypothesis import strategies as st

from seifertkit import LaurentPoly, Matrix, random_knot_matrix, random_seifert_data, validate
from seifertkit.arith import taylor_shift
from seifertkit.seifert import alexander_matrix, intersection_P

TREFOIL_M = [[-1, 1], [0, -1]]

TREFOIL_BAND_DOC = """\
seifert-data v1
g 1
m 1
M
-1 1
0 -1
V
1 0
A
0
"""

HOPF_DOC = """\
seifert-data v1
g 0
m 1
A
1
"""

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def trefoil_band():
    return validate(1, 1, TREFOIL_M, [[1, 0]], [[0]])


@pytest.fixture
def hopf():
    return validate(0, 1, [], [[]], [[1]])


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion.

    Usage: ``acceptance(label)`` returns a context manager; the criterion is
    marked failed if the block raises.
    """
    class _Rec:
        def __init__(self, label):
            self.label = label
            self.detail = ""

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            ok = exc_type is None
            _ACCEPTANCE.append((self.label, ok, self.detail if ok else repr(exc)[:200]))
            line = f"ACCEPTANCE {self.label}: {'PASS' if ok else 'FAIL'}"
            if self.detail:
                line += f" ({self.detail})"
            print(line)
            return False

    return _Rec


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


# -- hypothesis strategies --------------------------------------------------


def laurent_polys(var="t", lo=-4, hi=4, coeff=5, max_terms=5):
    return st.dictionaries(st.integers(lo, hi), st.integers(-coeff, coeff),
                           max_size=max_terms).map(lambda d: LaurentPoly(d, var))


@st.composite
def seifert_data(draw, g_max=3, m_max=3, lo=-3, hi=3, zero_A=False):
    seed = draw(st.integers(0, 2**32 - 1))
    r = random.Random(seed)
    g = draw(st.integers(0, g_max))
    m = draw(st.integers(1, m_max))
    return random_seifert_data(r, g, m, lo, hi, zero_A=zero_A)


@st.composite
def knot_matrices(draw, g_max=3, g_min=0):
    seed = draw(st.integers(0, 2**32 - 1))
    g = draw(st.integers(g_min, g_max))
    return random_knot_matrix(random.Random(seed), g)


@st.composite
def int_matrices(draw, n_max=4, lo=-5, hi=5, n=None):
    n = n if n is not None else draw(st.integers(0, n_max))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return Matrix(rows, n)


# -- shared oracles ---------------------------------------------------------

t = LaurentPoly.gen("t")


def inverse_series_t_route(M: Matrix, order: int, terms: int | None = None) -> bool:
    # t-side route: build the partial sum with explicit (1-t)^n factors and
    # check every entry of T*S - I vanishes to order `order` at t = 1
    n = M.nrows
    P = intersection_P(n // 2)
    PM = P @ M
    S = Matrix.zeros(n, n)
    Q = P
    w = 1 - t
    for k in range(order if terms is None else terms):
        S = S + Q.map(lambda x, k=k: x * w ** k)
        Q = PM @ Q
    E = alexander_matrix(M) @ S - Matrix.identity(n)
    for r in E.rows:
        for e in r:
            if e == 0:
                continue
            e = e if isinstance(e, LaurentPoly) else LaurentPoly.const(e)
            shifted = taylor_shift(e.shift(-min(0, e.valuation)))
            if any(shifted[:order]):
                return False
    return True
