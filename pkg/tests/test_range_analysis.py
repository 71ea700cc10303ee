import math

import numpy as np
import pytest
from hypothesis import given, settings
from matplotlib.path import Path

from evaluation.ensembles import philox
from tests.conftest import DISK_TOL, ginibre_matrix, haar, seeds
from tools.block_builder import flip_unitary, off_diagonal
from tools.errors import PreconditionError, ShapeError
from tools.matrix_core import cartesian_parts, op_norm, rayleigh, spectral_radius
from tools.range_analysis import (
    Membership,
    crawford_number,
    in_range,
    numerical_radius,
    range_boundary,
    _run_scan,
    _SupportFamily,
    range_shape,
    support_scan,
)


# ----------------------------------------------------------------------------
# numerical_radius
# ----------------------------------------------------------------------------


def test_numerical_radius_of_shift(shift):
    w = numerical_radius(shift, tol=DISK_TOL)
    assert w.lower <= 0.5 <= w.upper
    assert w.width <= DISK_TOL
    assert abs(rayleigh(shift, w.witness)) == pytest.approx(0.5, abs=DISK_TOL)


def test_numerical_radius_of_diag_i1(diag_i1):
    w = numerical_radius(diag_i1, tol=1e-9)
    assert w.value == pytest.approx(1.0, abs=1e-9)
    assert w.lower <= 1.0 <= w.upper


def test_numerical_radius_zero_is_exact():
    w = numerical_radius(np.zeros((3, 3)))
    assert (w.value, w.lower, w.upper) == (0.0, 0.0, 0.0)
    assert np.linalg.norm(w.witness) == pytest.approx(1.0)


def test_numerical_radius_hermitian_fast_path():
    w = numerical_radius(np.diag([-3.0, 2.0]))
    assert w.value == pytest.approx(3.0)
    assert w.theta_star == pytest.approx(math.pi)


def test_numerical_radius_scalar():
    w = numerical_radius([[2 + 1j]], tol=1e-10)
    assert w.value == pytest.approx(math.sqrt(5.0), abs=1e-9)


def test_numerical_radius_rejects_bad_input():
    with pytest.raises(ShapeError):
        numerical_radius(np.ones((2, 3)))
    with pytest.raises(PreconditionError):
        numerical_radius(np.eye(2), tol=0.0)
    with pytest.raises(PreconditionError):
        numerical_radius(np.eye(2), part="abs")


@pytest.mark.parametrize("seed", range(100))
def test_re_and_im_forms_agree(seed):
    t = ginibre_matrix(7000 + seed, 2 + seed % 4)
    re_form = numerical_radius(t, tol=1e-10, part="re")
    im_form = numerical_radius(t, tol=1e-10, part="im")
    assert abs(re_form.value - im_form.value) <= 2e-10 * op_norm(t).value
    assert re_form.lower <= im_form.upper and im_form.lower <= re_form.upper


def test_witness_attains_the_radius():
    t = ginibre_matrix(5, 5)
    w = numerical_radius(t, tol=1e-10)
    assert abs(rayleigh(t, w.witness)) == pytest.approx(w.value, abs=1e-8 * op_norm(t).value)


def theta_grid_radius(t, samples: int = 50_000) -> float:
    """max of lambda_max(Re(e^{i theta} T)) over a uniform theta grid; never above w(T)"""
    parts = cartesian_parts(t)
    thetas = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    pencil = np.cos(thetas)[:, None, None] * parts.re - np.sin(thetas)[:, None, None] * parts.im
    return float(np.linalg.eigvalsh(pencil)[:, -1].max())


def random_vector_radius(t, seed: int, draws: int = 10**6, chunk: int = 10**5) -> float:
    """max |<Tx, x>| over seeded random unit vectors"""
    rng = philox(seed)
    n = t.shape[0]
    best = 0.0
    for _ in range(draws // chunk):
        x = rng.standard_normal((chunk, n)) + 1j * rng.standard_normal((chunk, n))
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        values = np.abs(np.einsum("ki,ij,kj->k", x.conj(), t, x))
        best = max(best, float(values.max()))
    return best


JORDAN3 = np.diag([1.0, 1.0], k=1)


@pytest.mark.parametrize(
    "t, expected",
    [
        (np.array([[0, 1], [0, 0]]), 0.5),
        (np.diag([1j, 1.0]), 1.0),
        (JORDAN3, math.cos(math.pi / 4)),
        (np.array([[0, 0], [3, 1]]), (1 + math.sqrt(10)) / 2),
        (np.array([[0, 1], [2, 0]]), 1.5),
    ],
)
def test_certified_radius_regressions(t, expected):
    w = numerical_radius(t, tol=1e-10)
    assert w.value == pytest.approx(expected, abs=1e-8)
    assert w.lower - 1e-12 <= expected <= w.upper + 1e-12
    assert random_vector_radius(np.asarray(t, dtype=np.complex128), seed=77) == pytest.approx(expected, abs=1e-3)


@pytest.mark.parametrize("seed", range(20))
def test_radius_matches_theta_grid(seed):
    t = ginibre_matrix(9100 + seed, 2 + seed % 4)
    w = numerical_radius(t, tol=1e-10)
    grid = theta_grid_radius(t)
    norm = op_norm(t).value
    assert grid <= w.upper + 1e-12 * norm
    assert w.value == pytest.approx(grid, abs=1e-7 * norm)


def test_top_scan_certifies_smooth_maximum_quickly():
    family = _SupportFamily.for_matrix(ginibre_matrix(1011, 5), "re")
    outcome = _run_scan(family, "top", 1e-10)
    assert "node_limit" not in outcome.termination
    assert outcome.nodes < 5_000
    assert outcome.upper - outcome.lower <= 1e-10 * family.scale


def test_disk_scan_stays_cheap_at_default_tol(shift):
    family = _SupportFamily.for_matrix(shift, "re")
    outcome = _run_scan(family, "top", 1e-10)
    assert "node_limit" not in outcome.termination
    assert outcome.nodes < 40_000
    assert outcome.lower <= 0.5 <= outcome.upper
    assert outcome.upper - outcome.lower <= 1e-10


def test_witness_is_read_only():
    w = numerical_radius(ginibre_matrix(8, 3), tol=1e-9)
    with pytest.raises(ValueError):
        w.witness[0] = 0.0
    hermitian = numerical_radius(np.diag([1.0, -2.0]))
    assert not hermitian.witness.flags.writeable


@pytest.mark.parametrize("seed", range(5))
def test_off_diagonal_symmetry(seed):
    a = ginibre_matrix(9300 + seed, 3)
    w_a = numerical_radius(a, tol=1e-10).value
    assert numerical_radius(off_diagonal(a, a), tol=1e-10).value == pytest.approx(w_a, abs=1e-8 * op_norm(a).value)


def test_flip_unitary_conjugation_keeps_radius():
    t = ginibre_matrix(9400, 5)
    u = flip_unitary([2, 3])
    flipped = u @ t @ u.conj().T
    assert numerical_radius(flipped, tol=1e-10).value == pytest.approx(
        numerical_radius(t, tol=1e-10).value, abs=1e-8 * op_norm(t).value
    )


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_radius_between_classic_bounds(seed):
    t = ginibre_matrix(seed, 3)
    w = numerical_radius(t, tol=1e-9)
    norm = op_norm(t)
    assert norm.lower / 2 <= w.upper
    assert w.lower <= norm.upper
    assert spectral_radius(t).lower <= w.upper


@settings(max_examples=10, deadline=None)
@given(seeds, seeds)
def test_radius_is_unitarily_invariant(seed_t, seed_u):
    t = ginibre_matrix(seed_t, 3)
    u = haar(seed_u, 3)
    a = numerical_radius(t, tol=1e-9)
    b = numerical_radius(u @ t @ u.conj().T, tol=1e-9)
    assert a.value == pytest.approx(b.value, abs=1e-8 * op_norm(t).value)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_radius_scales_linearly(seed):
    t = ginibre_matrix(seed, 3)
    w = numerical_radius(t, tol=1e-9).value
    assert numerical_radius(-2.5j * t, tol=1e-9).value == pytest.approx(2.5 * w, rel=1e-8)


def test_support_scan_matches_radius():
    t = ginibre_matrix(3, 4)
    parts = cartesian_parts(t)
    sup = support_scan(parts.re, parts.im, tol=1e-9)
    assert sup.value == pytest.approx(numerical_radius(t, tol=1e-9).value, abs=1e-8 * op_norm(t).value)


def test_support_scan_requires_hermitian_parts(shift):
    with pytest.raises(PreconditionError):
        support_scan(shift, np.eye(2))


# ----------------------------------------------------------------------------
# crawford_number
# ----------------------------------------------------------------------------


def test_crawford_of_shift_is_exact_zero(shift):
    m = crawford_number(shift, tol=DISK_TOL)
    assert (m.value, m.lower, m.upper) == (0.0, 0.0, 0.0)


def test_crawford_of_diag_i1(diag_i1):
    m = crawford_number(diag_i1, tol=1e-9)
    assert m.value == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_crawford_of_shifted_disk(shift):
    m = crawford_number(np.eye(2) + shift, tol=DISK_TOL)
    assert m.lower <= 0.5 + 1e-12 and 0.5 - 1e-12 <= m.upper


def test_crawford_hermitian():
    assert crawford_number(np.diag([2.0, 5.0])).value == pytest.approx(2.0)
    assert crawford_number(np.diag([-2.0, 5.0])).value == 0.0
    assert crawford_number(np.diag([-4.0, -1.5])).value == pytest.approx(1.5)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_crawford_below_radius(seed):
    t = ginibre_matrix(seed, 3) + 3.0 * np.eye(3)
    assert crawford_number(t, tol=1e-9).lower <= numerical_radius(t, tol=1e-9).upper


# ----------------------------------------------------------------------------
# boundary, shape and membership
# ----------------------------------------------------------------------------


def test_boundary_of_shift_is_a_circle(shift):
    boundary = range_boundary(shift, 360)
    assert len(boundary.samples) == 360
    assert boundary.shape == "region"
    assert boundary.max_modulus() == pytest.approx(0.5, abs=1e-12)
    for sample in boundary.samples:
        assert abs(sample.point) == pytest.approx(0.5, abs=1e-12)
        assert sample.support == pytest.approx(0.5, abs=1e-12)


def test_outer_polygon_encloses_inner(shift):
    boundary = range_boundary(shift, 24)
    inner = np.abs(boundary.inner_polygon())
    outer = np.abs(boundary.outer_polygon())
    assert np.all(outer >= inner - 1e-12)
    assert np.all(outer <= 0.5 / math.cos(math.pi / 24) + 1e-12)


def test_boundary_degenerate_shapes(eye2, diag_i1):
    point = range_boundary(eye2, 8)
    assert point.shape == "point" and point.degenerate
    segment = range_boundary(diag_i1, 8)
    assert segment.shape == "segment"
    ends = sorted(segment.endpoints, key=lambda z: z.real)
    assert ends[0] == pytest.approx(1j, abs=1e-12)
    assert ends[1] == pytest.approx(1.0, abs=1e-12)


def test_boundary_needs_three_samples(shift):
    with pytest.raises(PreconditionError):
        range_boundary(shift, 2)


def test_range_shape_non_normal_is_region(row37_blocks):
    a, _ = row37_blocks
    assert range_shape(a) == ("region", None)


def test_in_range_region(shift):
    assert in_range(shift, 0.0, tol=1e-6) is Membership.INSIDE
    assert in_range(shift, 0.1 + 0.1j, tol=0.0) is Membership.INSIDE
    assert in_range(shift, 1.0, tol=1e-6) is Membership.OUTSIDE
    assert in_range(shift, 0.6j, tol=0.0) is Membership.OUTSIDE


def test_in_range_segment(diag_i1):
    assert in_range(diag_i1, 0.5 + 0.5j, tol=0.0) is Membership.INSIDE
    assert in_range(diag_i1, 0.0, tol=0.0) is Membership.OUTSIDE
    assert in_range(diag_i1, 0.0, tol=1e-3) is Membership.OUTSIDE
    assert in_range(diag_i1, 0.5 + 0.5j, tol=1e-3) is Membership.UNCERTAIN


@pytest.mark.parametrize("seed", range(8))
def test_boundary_brackets_radius(seed):
    t = ginibre_matrix(9500 + seed, 2 + seed % 3)
    n_samples = 48
    boundary = range_boundary(t, n_samples)
    w = numerical_radius(t, tol=1e-10)
    slack = 1e-12 * op_norm(t).value
    assert boundary.max_modulus() <= w.upper + slack
    assert w.lower <= boundary.max_modulus() / math.cos(math.pi / n_samples) + slack


@pytest.mark.parametrize("seed", range(6))
def test_crawford_zero_when_origin_inside_inner_polygon(seed):
    g = ginibre_matrix(9600 + seed, 3 + seed % 2)
    # tr(T)/n lies in W(T), so centring puts 0 in the range
    t = g - np.trace(g) / g.shape[0] * np.eye(g.shape[0])
    polygon = range_boundary(t, 128).inner_polygon()
    assert Path(np.column_stack([polygon.real, polygon.imag])).contains_point((0.0, 0.0))
    assert crawford_number(t, tol=1e-9).value == 0.0


def test_in_range_boundary_point_of_identity(eye2):
    assert in_range(eye2, 1.0, tol=0.0) is Membership.INSIDE
    assert in_range(eye2, 1.0, tol=1e-6) is Membership.UNCERTAIN


def test_in_range_rejects_negative_tol(shift):
    with pytest.raises(PreconditionError):
        in_range(shift, 0.0, tol=-1.0)
