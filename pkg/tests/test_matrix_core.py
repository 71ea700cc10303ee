import math

import numpy as np
import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from tests.conftest import complex_matrices, ginibre_matrix, haar, seeds
from tools.errors import PreconditionError, ShapeError
from tools.matrix_core import (
    CertifiedValue,
    adjoint,
    as_matrix,
    cartesian_parts,
    check_hermitian,
    direct_sum,
    hermitian_extremes,
    matmul,
    min_norm,
    op_norm,
    rotate,
    spectral_radius,
)


def test_as_matrix_scalar_becomes_1x1_and_read_only():
    m = as_matrix(2 + 1j)
    assert m.shape == (1, 1)
    assert m.dtype == np.complex128
    with pytest.raises(ValueError):
        m[0, 0] = 0


def test_as_matrix_rejects_bad_input():
    with pytest.raises(ShapeError):
        as_matrix(np.zeros((2, 2, 2)))
    with pytest.raises(ShapeError):
        as_matrix(np.zeros((0, 3)))
    with pytest.raises(PreconditionError):
        as_matrix([[1.0, float("nan")]])
    assert as_matrix(np.zeros((0, 0)), allow_empty=True).shape == (0, 0)


def test_certified_value_enclosure_is_checked():
    with pytest.raises(ValidationError):
        CertifiedValue(value=2.0, lower=0.0, upper=1.0)
    exact = CertifiedValue.exact(0.5)
    assert exact.width == 0.0
    assert exact.summary() == {"value": 0.5, "lower": 0.5, "upper": 0.5}


def test_norms_of_the_shift(shift):
    norm = op_norm(shift)
    assert norm.lower <= 1.0 <= norm.upper
    c = min_norm(shift)
    assert c.value == 0.0 and c.lower == 0.0
    r = spectral_radius(shift)
    assert r.value == 0.0 and r.lower == 0.0


def test_norms_of_diag_i1(diag_i1):
    assert min_norm(diag_i1).value == pytest.approx(1.0, abs=1e-14)
    assert spectral_radius(diag_i1).value == pytest.approx(1.0, abs=1e-12)


def test_min_norm_of_wide_matrix_is_zero():
    assert min_norm(np.ones((1, 2))).value == 0.0


def test_zero_matrix_norm_is_exact():
    assert op_norm(np.zeros((3, 3))) == CertifiedValue.exact(0.0)


def test_check_hermitian(shift):
    with pytest.raises(PreconditionError, match="not Hermitian"):
        check_hermitian(as_matrix(shift))
    h = np.array([[1, 2j], [-2j, 3]])
    assert np.array_equal(check_hermitian(as_matrix(h)), h)


def test_hermitian_extremes():
    ext = hermitian_extremes(np.diag([3.0, 1.0, 2.0]))
    assert ext.lambda_min == pytest.approx(1.0)
    assert ext.lambda_max == pytest.approx(3.0)
    assert abs(ext.v_max[0]) == pytest.approx(1.0)


def test_direct_sum_skips_empty_blocks():
    d = direct_sum(np.zeros((0, 0)), [[1]], np.eye(2))
    assert d.shape == (3, 3)
    assert np.array_equal(d, np.eye(3))


def test_matmul_conformability():
    assert matmul(np.ones((2, 3)), np.ones((3, 1))).shape == (2, 1)
    with pytest.raises(ShapeError):
        matmul(np.ones((2, 3)), np.ones((2, 3)))


def test_rotate():
    assert rotate([[1.0]], math.pi / 2)[0, 0] == pytest.approx(1j)


@given(complex_matrices())
def test_adjoint_is_an_involution(t):
    assert np.array_equal(adjoint(adjoint(t)), t)


@given(complex_matrices())
def test_cartesian_parts_recombine(t):
    parts = cartesian_parts(t)
    assert np.allclose(parts.re, parts.re.conj().T)
    assert np.allclose(parts.im, parts.im.conj().T)
    assert np.allclose(parts.re + 1j * parts.im, t, atol=1e-12)


@settings(max_examples=30)
@given(seeds, seeds)
def test_norm_is_unitarily_invariant(seed_t, seed_u):
    t = ginibre_matrix(seed_t, 4)
    u = haar(seed_u, 4)
    assert op_norm(u @ t @ u.conj().T).value == pytest.approx(op_norm(t).value, rel=1e-12)


@settings(max_examples=30)
@given(complex_matrices())
def test_spectral_radius_below_norm(t):
    r, norm = spectral_radius(t), op_norm(t)
    assert r.lower <= norm.upper
    assert r.upper <= norm.upper
