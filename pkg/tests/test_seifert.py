import pytest
from hypothesis import given

from seifertkit import (
    Matrix,
    SeifertValidationError,
    alexander_matrix,
    det,
    full_seifert_matrix,
    intersection_P,
    validate,
)
from seifertkit.arith import LaurentPoly

from conftest import TREFOIL_M, seifert_data

t = LaurentPoly.gen("t")


def test_validate_trefoil_band(trefoil_band):
    assert trefoil_band.g == 1 and trefoil_band.m == 1
    assert trefoil_band.M - trefoil_band.M.T == Matrix([[0, 1], [-1, 0]])


def test_validate_hopf(hopf):
    assert hopf.M.shape == (0, 0)
    assert hopf.V.shape == (1, 0)


def test_validate_rejects_non_symplectic():
    with pytest.raises(SeifertValidationError) as exc:
        validate(1, 1, [[0, 0], [0, 0]], [[1, 0]], [[0]])
    assert any("M - M^T" in v for v in exc.value.violations)


def test_validate_collects_all_violations():
    with pytest.raises(SeifertValidationError) as exc:
        validate(1, 2, [[0, 0], [0, 0]], [[1, 0]], [[0, 1], [2, 0]])
    v = exc.value.violations
    assert len(v) == 3
    assert any("V has shape" in x for x in v)
    assert any("symmetric" in x for x in v)


def test_validate_rejects_m_zero():
    with pytest.raises(SeifertValidationError):
        validate(1, 0, TREFOIL_M, [], [])


def test_intersection_P():
    assert intersection_P(1) == Matrix([[0, -1], [1, 0]])
    assert intersection_P(0).shape == (0, 0)
    P2 = intersection_P(2)
    assert P2 @ P2 == -Matrix.identity(4)
    assert P2.T == -P2


def test_full_seifert_matrix(trefoil_band, hopf):
    assert full_seifert_matrix(trefoil_band) == Matrix([[-1, 1, 1], [0, -1, 0], [1, 0, 0]])
    assert full_seifert_matrix(hopf) == Matrix([[1]])


def test_alexander_matrix(trefoil_band, hopf):
    T = alexander_matrix(trefoil_band)
    assert T == Matrix([[1 - t, t], [-1, 1 - t]])
    assert det(T)(1) == 1
    assert alexander_matrix(hopf).shape == (0, 0)


@given(seifert_data())
def test_random_data_invariants(d):
    P = d.P
    assert det(d.M - d.M.T) == 1
    D = det(alexander_matrix(d))
    assert (D(1) if isinstance(D, LaurentPoly) else D) == 1
    Mo = full_seifert_matrix(d)
    n = 2 * d.g
    expected = Matrix([[(-P[i, j] if i < n and j < n else 0) for j in range(n + d.m)]
                       for i in range(n + d.m)])
    assert Mo - Mo.T == expected
