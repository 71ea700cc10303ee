"""
NumRange Toolkit - Numerical range analysis
Certified numerical radius, Crawford number, boundary sampling and
membership, all driven by the support function of W(T):

    h(theta) = lambda_max(Re(e^{i theta} T)) = max { Re(e^{i theta} z) : z in W(T) }

w(T) is the global maximum of h; m(T) is max(0, max_theta lambda_min(Re(e^{i theta} T))).
Both maxima are found by a best-first branch-and-bound over theta (pybnb),
with interval bounds from the supporting lines at the interval ends, from a
second-order model built on the top eigenpair (top scans), and from the
Lipschitz constant ||T||.
"""

import math
from enum import Enum
from typing import List, Literal, NamedTuple, Optional, Tuple, Union

import numpy as np
import pybnb
from pydantic import BaseModel, ConfigDict

from config.settings import Settings
from memory.result_cache import matrix_key, result_cache
from observability.logger import nr_logger
from tools.errors import PreconditionError
from tools.matrix_core import (
    EPS,
    CertifiedValue,
    ComplexMatrix,
    as_matrix,
    cartesian_parts,
    check_hermitian,
    eigen_error,
    freeze,
    max_abs,
    op_norm,
    require_square,
)

TWO_PI = 2.0 * math.pi

ScanPart = Literal["re", "im"]
ScanMode = Literal["top", "bottom"]


class Membership(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    UNCERTAIN = "uncertain"


class RangeSample(BaseModel):
    """One boundary sample: support point of W(T) in direction theta"""

    model_config = ConfigDict(frozen=True)

    theta: float
    re: float
    im: float
    support: float

    @property
    def point(self) -> complex:
        return complex(self.re, self.im)


class RangeBoundary(BaseModel):
    """Sampled boundary of W(T), bracketing the range from inside and outside"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    samples: List[RangeSample]
    shape: Literal["region", "segment", "point"]
    endpoints: Optional[Tuple[complex, complex]] = None
    eigenvalues: np.ndarray

    @property
    def degenerate(self) -> bool:
        return self.shape != "region"

    def max_modulus(self) -> float:
        return max(abs(s.point) for s in self.samples)

    def inner_polygon(self) -> np.ndarray:
        """Support points in theta order; their convex hull lies inside W(T)"""
        return np.array([s.point for s in self.samples], dtype=np.complex128)

    def outer_polygon(self) -> np.ndarray:
        """Vertices of the intersection of the sampled supporting half-planes"""
        vertices = []
        count = len(self.samples)
        for k, first in enumerate(self.samples):
            second = self.samples[(k + 1) % count]
            b = second.theta if k + 1 < count else second.theta + TWO_PI
            vertices.append(_tangent_vertex(first.theta, b, first.support, second.support))
        return np.array(vertices, dtype=np.complex128)


# ----------------------------------------------------------------------------
# Support family and interval certificates
# ----------------------------------------------------------------------------


class _SupportFamily:
    """
    Hermitian pencil H(theta) = cos(theta) P - sin(theta) Q = Re(e^{i theta} S), S = P + iQ.
    lambda_max(H(theta)) is the support function of W(S).
    """

    def __init__(self, p: np.ndarray, q: np.ndarray):
        self.p = p
        self.q = q
        self.s = p + 1j * q
        self.scale = op_norm(self.s).upper
        self.err = eigen_error(self.s, self.scale)
        self.eigensolves = 0

    @classmethod
    def for_matrix(cls, t: ComplexMatrix, part: ScanPart = "re") -> "_SupportFamily":
        parts = cartesian_parts(t)
        if part == "re":
            return cls(parts.re, parts.im)
        if part == "im":
            # Im(e^{i theta} T) = Re(e^{i theta} (-iT)); W(-iT) is W(T) turned by -pi/2
            return cls(parts.im, -parts.re)
        raise PreconditionError(f"part must be 're' or 'im', got {part!r}")

    def hermitian(self, theta: float) -> np.ndarray:
        return math.cos(theta) * self.p - math.sin(theta) * self.q

    def _eigh(self, theta: float):
        self.eigensolves += 1
        return np.linalg.eigh(self.hermitian(theta))

    def top_jet(self, theta: float) -> Tuple[float, "_Jet"]:
        """lambda_max of H(theta) with its local jet"""
        values, vectors = self._eigh(theta)
        x = vectors[:, -1]
        # K = -H'(theta)
        kx = (math.sin(theta) * self.p + math.cos(theta) * self.q) @ x
        k = float(np.vdot(x, kx).real)
        coupling = np.abs(vectors[:, :-1].conj().T @ kx)
        return float(values[-1]), _Jet(slope=-k, gaps=values[-1] - values[:-1], coupling=coupling)

    def bottom(self, theta: float) -> Tuple[float, complex]:
        """lambda_min and the point <Sx, x> of its eigenvector"""
        values, vectors = self._eigh(theta)
        x = vectors[:, 0]
        return float(values[0]), complex(np.vdot(x, self.s @ x))

    def top_pair(self, theta: float) -> Tuple[float, np.ndarray]:
        values, vectors = self._eigh(theta)
        return float(values[-1]), freeze(vectors[:, -1].copy())

    def bottom_pair(self, theta: float) -> Tuple[float, np.ndarray]:
        values, vectors = self._eigh(theta)
        return float(values[0]), freeze(vectors[:, 0].copy())


class _Jet(NamedTuple):
    """
    Top eigenpair data at one theta: h'(theta), the gaps lambda_max - lambda_j and
    the couplings |<y_j, K x>| to the other eigenvectors.
    """

    slope: float
    gaps: np.ndarray
    coupling: np.ndarray


def _tangent_vertex(a: float, b: float, fa: float, fb: float) -> complex:
    """Intersection of the lines Re(e^{ia} z) = fa and Re(e^{ib} z) = fb (0 < b - a < pi)"""
    det = math.sin(a - b)
    x = (fb * math.sin(a) - fa * math.sin(b)) / det
    y = (fb * math.cos(a) - fa * math.cos(b)) / det
    return complex(x, y)


def _in_arc(angle: float, a: float, width: float) -> bool:
    return (angle - a) % TWO_PI <= width


def _wedge_bound(a: float, b: float, fa: float, fb: float) -> Tuple[float, float]:
    """
    Max over [a, b] of the support of the wedge cut out by the two end tangents,
    and the size of the terms it was computed from.

    About the midpoint the wedge support is A cos(phi) + B sin(phi), |phi| <= (b - a)/2,
    with A = (fa + fb) / (2 cos) and B = (fb - fa) / (2 sin) of the half width;
    both stay bounded by ||T|| as the interval shrinks.
    """
    half = 0.5 * (b - a)
    along = 0.5 * (fa + fb) / math.cos(half)
    across = 0.5 * (fb - fa) / math.sin(half)
    size = abs(along) + abs(across)
    if abs(math.atan2(across, along)) <= half:
        return math.hypot(along, across), size
    return max(fa, fb), size


def _jet_bound(half: float, f: float, slope: float, jet: _Jet, scale: float, err: float) -> float:
    """
    Upper bound on h over [t, t + half] (or [t - half, t]) from the top eigenpair at t;
    `slope` is the derivative of h in the direction of travel.

    With H(t + u) = cos(u) H(t) - sin(u) K, expanding unit vectors in the eigenbasis
    at t and completing the square in each coupling gives
        h(t + u) <= f cos u + slope sin u + C sin^2 u,
        C = sum_j coupling_j^2 / d_j / (1 - mu),
        d_j = gap_j cos(half) - ||K|| sin(half),  mu = |slope| sin(half) / min_j d_j,
    which is exact to second order; inf when some gap does not dominate the interval.
    """
    s_max = math.sin(half)
    curvature = 0.0
    if jet.gaps.size:
        dens = math.cos(half) * (jet.gaps - 2.0 * err) - s_max * (scale + err)
        d_min = float(dens.min())
        if d_min <= 0.0:
            return math.inf
        mu = s_max * (abs(slope) + err) / d_min
        if mu >= 1.0:
            return math.inf
        curvature = float(np.sum((jet.coupling + err) ** 2 / dens)) / (1.0 - mu)

    # cos u <= 1 - sin^2(u)/2; for f < 0 the quartic remainder is charged at s_max
    kappa = curvature - 0.5 * f
    best = max(f, f + slope * s_max + kappa * s_max * s_max)
    if kappa < 0.0:
        peak = -slope / (2.0 * kappa)
        if 0.0 < peak < s_max:
            best = max(best, f - slope * slope / (4.0 * kappa))
    if f < 0.0:
        best -= 0.5 * f * s_max**4
    return best


def _min_of_supports_bound(a: float, b: float, za: complex, zb: complex) -> float:
    """max over theta in [a, b] of min(Re(e^{i theta} za), Re(e^{i theta} zb))"""
    width = b - a

    def envelope(angle: float) -> float:
        rot = complex(math.cos(angle), math.sin(angle))
        return min((rot * za).real, (rot * zb).real)

    candidates = []
    for z in (za, zb):
        if z != 0:
            candidates.append(-math.atan2(z.imag, z.real))
    diff = za - zb
    if diff != 0:
        normal = -math.atan2(diff.imag, diff.real)
        candidates.extend([normal + math.pi / 2, normal - math.pi / 2])
    inside = [envelope(c) for c in candidates if _in_arc(c, a, width)]
    return max([envelope(a), envelope(b)] + inside)


# ----------------------------------------------------------------------------
# Branch-and-bound over theta
# ----------------------------------------------------------------------------


class _ThetaScanProblem(pybnb.Problem):
    """
    Maximise f over [0, 2 pi), f the top (mode "top") or bottom (mode "bottom")
    eigenvalue of the support family.
    Node state: (a, b, fa, fb, ea, eb, bound); e is the top jet (mode "top") or the
    support point <Sx, x> of the bottom eigenvector (mode "bottom"). The root holds the initial grid.
    """

    def __init__(self, family: _SupportFamily, mode: ScanMode, n_intervals: int):
        self._family = family
        self._mode = mode
        self._tie = 4.0 * EPS * family.scale
        self.best_value = -math.inf
        self.best_theta = 0.0
        self.best_theta_value = -math.inf

        grid = [TWO_PI * k / n_intervals for k in range(n_intervals)]
        values = [self._evaluate(theta) for theta in grid]
        self._root_children = []
        for k in range(n_intervals):
            b = grid[k + 1] if k + 1 < n_intervals else TWO_PI
            fa, ea = values[k]
            fb, eb = values[(k + 1) % n_intervals]
            self._root_children.append(self._make_state(grid[k], b, fa, fb, ea, eb, math.inf))
        self._root_objective = max(v for v, _ in values)
        self._root_bound = max(s[6] for s in self._root_children)
        self._state = None

    def _evaluate(self, theta: float) -> Tuple[float, Union[_Jet, complex]]:
        if self._mode == "top":
            value, extra = self._family.top_jet(theta)
        else:
            value, extra = self._family.bottom(theta)

        # smallest theta among near-maximal evaluations
        if value > self.best_value + self._tie:
            self.best_theta, self.best_theta_value = theta, value
        elif value >= self.best_value - self._tie and theta < self.best_theta:
            self.best_theta, self.best_theta_value = theta, value
        self.best_value = max(self.best_value, value)
        return value, extra

    def _make_state(self, a, b, fa, fb, ea, eb, parent_bound):
        family = self._family
        width = b - a
        half = 0.5 * width
        lipschitz = 0.5 * (fa + fb + family.scale * width) + family.err
        if self._mode == "top":
            wedge, size = _wedge_bound(a, b, fa, fb)
            geometric = wedge + family.err / math.cos(half) + 8.0 * EPS * (size + family.scale)
            local = max(
                _jet_bound(half, fa, ea.slope, ea, family.scale, family.err),
                _jet_bound(half, fb, -eb.slope, eb, family.scale, family.err),
            )
            geometric = min(geometric, local + 3.0 * family.err + 8.0 * EPS * family.scale)
        else:
            geometric = _min_of_supports_bound(a, b, ea, eb) + family.err + 8.0 * EPS * family.scale
        bound = max(min(lipschitz, geometric, parent_bound), fa, fb)
        return (a, b, fa, fb, ea, eb, bound)

    #
    # required methods
    #
    def sense(self):
        return pybnb.maximize

    def objective(self):
        if self._state is None:
            return self._root_objective
        return max(self._state[2], self._state[3])

    def bound(self):
        if self._state is None:
            return self._root_bound
        return self._state[6]

    def save_state(self, node):
        node.state = self._state

    def load_state(self, node):
        self._state = node.state

    def branch(self):
        if self._state is None:
            for state in self._root_children:
                child = pybnb.Node()
                child.state = state
                yield child
            return
        a, b, fa, fb, ea, eb, parent_bound = self._state
        m = 0.5 * (a + b)
        fm, em = self._evaluate(m)
        child = pybnb.Node()
        child.state = self._make_state(a, m, fa, fm, ea, em, parent_bound)
        yield child
        child = pybnb.Node()
        child.state = self._make_state(m, b, fm, fb, em, eb, parent_bound)
        yield child


class _ScanOutcome(BaseModel):
    lower: float
    upper: float
    best: float
    theta_star: float
    theta_value: float
    nodes: int
    termination: str


def _run_scan(
    family: _SupportFamily,
    mode: ScanMode,
    tol: float,
    bound_stop: Optional[float] = None,
    objective_stop: Optional[float] = None,
) -> _ScanOutcome:
    problem = _ThetaScanProblem(family, mode, Settings.BNB_INITIAL_INTERVALS)
    target = tol * family.scale
    gap = max(target - 2.0 * family.err, 0.5 * target)

    solver = pybnb.Solver(comm=None)
    results = solver.solve(
        problem,
        absolute_gap=gap,
        relative_gap=None,
        queue_tolerance=0,
        node_limit=Settings.BNB_MAX_EIGENSOLVES,
        bound_stop=bound_stop,
        objective_stop=objective_stop,
        log=None,
        disable_signal_handlers=True,
    )

    termination = str(results.termination_condition)
    global_bound = results.bound
    if global_bound is None or not math.isfinite(global_bound):
        global_bound = problem.best_value + math.pi * family.scale
    upper = max(float(global_bound), problem.best_value)
    lower = problem.best_value - family.err

    if "node_limit" in termination:
        nr_logger.logger.warning(
            f"[SCAN] eigensolve budget exhausted; returning widened enclosure [{lower:.6g}, {upper:.6g}]"
        )

    nr_logger.record_metric("bnb_nodes", float(results.nodes))
    nr_logger.record_metric("eigensolves", float(family.eigensolves))
    nr_logger.log_tool_usage(
        "theta_scan",
        input_data={"mode": mode, "dim": family.s.shape[0], "tol": tol},
        output_data={"lower": lower, "upper": upper, "nodes": results.nodes, "termination": termination},
    )
    return _ScanOutcome(
        lower=lower,
        upper=upper,
        best=problem.best_value,
        theta_star=problem.best_theta,
        theta_value=problem.best_theta_value,
        nodes=int(results.nodes),
        termination=termination,
    )


# ----------------------------------------------------------------------------
# Public operations
# ----------------------------------------------------------------------------


def _square(matrix, name: str = "T") -> ComplexMatrix:
    t = as_matrix(matrix, name)
    require_square(t, name)
    return t


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise PreconditionError(f"tol must be positive, got {tol!r}")


def _is_exactly_hermitian(t: ComplexMatrix) -> bool:
    return bool(np.array_equal(t, t.conj().T))


def _unit(n: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.complex128)
    e[0] = 1.0
    return freeze(e)


def numerical_radius(matrix, tol: float = Settings.DEFAULT_TOL, part: ScanPart = "re") -> CertifiedValue:
    """
    w(T) = max_theta ||Re(e^{i theta} T)||, or the same with Im.
    Enclosure width <= tol * ||T||; theta_star is the smallest maximising angle found
    and the witness x* is the top eigenvector there, |<Tx*, x*>| inside the enclosure.
    """
    t = _square(matrix)
    _check_tol(tol)
    if part not in ("re", "im"):
        raise PreconditionError(f"part must be 're' or 'im', got {part!r}")
    key = matrix_key("numerical_radius", t, tol, part)
    cached = result_cache.retrieve(key)
    if cached is not None:
        nr_logger.record_metric("cache_hits", 1)
        return cached

    norm = op_norm(t)
    if norm.value == 0.0:
        result = CertifiedValue.exact(0.0, theta_star=0.0, witness=_unit(t.shape[0]))
    elif _is_exactly_hermitian(t):
        result = _hermitian_radius(t, norm.upper, part)
    else:
        family = _SupportFamily.for_matrix(t, part)
        outcome = _run_scan(family, "top", tol)
        _, witness = family.top_pair(outcome.theta_star)
        result = CertifiedValue(
            value=outcome.theta_value,
            lower=max(0.0, outcome.lower),
            upper=outcome.upper,
            theta_star=outcome.theta_star,
            witness=witness,
        )

    result_cache.store(key, result)
    return result


def _hermitian_radius(t: ComplexMatrix, scale: float, part: ScanPart) -> CertifiedValue:
    values, vectors = np.linalg.eigh(t)
    err = eigen_error(t, scale)
    top_wins = values[-1] >= -values[0]
    value = float(values[-1] if top_wins else -values[0])
    witness = freeze(vectors[:, -1 if top_wins else 0].copy())
    if part == "re":
        theta = 0.0 if top_wins else math.pi
    else:
        theta = math.pi / 2 if top_wins else 3 * math.pi / 2
    return CertifiedValue(
        value=value, lower=max(0.0, value - err), upper=value + err, theta_star=theta, witness=witness
    )


def support_scan(p, q, tol: float = Settings.DEFAULT_TOL) -> CertifiedValue:
    """
    sup_theta ||cos(theta) P - sin(theta) Q|| for Hermitian P, Q, scanned directly
    on the pencil (no cache).
    """
    _check_tol(tol)
    p = check_hermitian(as_matrix(p, "P"), "P")
    q = check_hermitian(as_matrix(q, "Q"), "Q")
    if p.shape != q.shape:
        raise PreconditionError(f"pencil parts differ in shape: {p.shape} vs {q.shape}")
    family = _SupportFamily(p, q)
    if family.scale == 0.0:
        return CertifiedValue.exact(0.0)
    # ||H(theta)|| = max(lambda_max(H(theta)), lambda_max(H(theta + pi))), so the top scan covers both
    outcome = _run_scan(family, "top", tol)
    return CertifiedValue(
        value=outcome.theta_value,
        lower=max(0.0, outcome.lower),
        upper=outcome.upper,
        theta_star=outcome.theta_star,
    )


def crawford_number(matrix, tol: float = Settings.DEFAULT_TOL) -> CertifiedValue:
    """
    m(T) = min |z| over W(T) = max(0, max_theta lambda_min(Re(e^{i theta} T))).
    Exact 0 once the scan proves the maximum is <= 0 (0 in W(T), by convexity).
    """
    t = _square(matrix)
    _check_tol(tol)
    key = matrix_key("crawford_number", t, tol)
    cached = result_cache.retrieve(key)
    if cached is not None:
        nr_logger.record_metric("cache_hits", 1)
        return cached

    norm = op_norm(t)
    if norm.value == 0.0:
        result = CertifiedValue.exact(0.0)
    elif _is_exactly_hermitian(t):
        result = _hermitian_crawford(t, norm.upper)
    else:
        family = _SupportFamily.for_matrix(t, "re")
        outcome = _run_scan(family, "bottom", tol, bound_stop=0.0)
        if outcome.upper <= 0.0:
            result = CertifiedValue.exact(0.0)
        elif outcome.theta_value <= 0.0:
            result = CertifiedValue(value=0.0, lower=0.0, upper=outcome.upper)
        else:
            _, witness = family.bottom_pair(outcome.theta_star)
            result = CertifiedValue(
                value=outcome.theta_value,
                lower=max(0.0, outcome.lower),
                upper=outcome.upper,
                theta_star=outcome.theta_star,
                witness=witness,
            )

    result_cache.store(key, result)
    return result


def _hermitian_crawford(t: ComplexMatrix, scale: float) -> CertifiedValue:
    values, vectors = np.linalg.eigh(t)
    lo, hi = float(values[0]), float(values[-1])
    if lo <= 0.0 <= hi:
        return CertifiedValue.exact(0.0)
    err = eigen_error(t, scale)
    if lo > 0:
        value, theta, witness = lo, 0.0, freeze(vectors[:, 0].copy())
    else:
        value, theta, witness = -hi, math.pi, freeze(vectors[:, -1].copy())
    return CertifiedValue(
        value=value, lower=max(0.0, value - err), upper=value + err, theta_star=theta, witness=witness
    )


def range_shape(matrix) -> Tuple[str, Optional[Tuple[complex, complex]]]:
    """
    Classify W(T): "point", "segment" (normal with collinear eigenvalues) or "region".
    Degenerate shapes come with their two endpoints.
    """
    t = _square(matrix)
    n = t.shape[0]
    if n == 1:
        c = complex(t[0, 0])
        return "point", (c, c)
    norm = op_norm(t).value
    if norm == 0.0:
        return "point", (0j, 0j)

    tol = 1e-10 * norm
    t_star = t.conj().T
    if max_abs(t @ t_star - t_star @ t) > tol * norm:
        # non-normal: W(T) has interior
        return "region", None

    eig = np.linalg.eigvals(t)
    centre = complex(np.mean(eig))
    offsets = eig - centre
    spread = float(np.max(np.abs(offsets)))
    if spread <= tol:
        return "point", (centre, centre)
    direction = offsets[int(np.argmax(np.abs(offsets)))] / spread
    rotated = offsets * np.conj(direction)
    if float(np.max(np.abs(rotated.imag))) > tol:
        return "region", None
    start = centre + direction * float(np.min(rotated.real))
    end = centre + direction * float(np.max(rotated.real))
    return "segment", (complex(start), complex(end))


def range_boundary(matrix, n_samples: int = Settings.BOUNDARY_SAMPLES) -> RangeBoundary:
    """Support points of W(T) at n uniformly spaced directions"""
    t = _square(matrix)
    if n_samples < 3:
        raise PreconditionError(f"n_samples must be at least 3, got {n_samples}")

    family = _SupportFamily.for_matrix(t, "re")
    samples = []
    for k in range(n_samples):
        theta = TWO_PI * k / n_samples
        support, x = family.top_pair(theta)
        z = complex(np.vdot(x, t @ x))
        samples.append(RangeSample(theta=theta, re=z.real, im=z.imag, support=support))

    shape, endpoints = range_shape(t)
    nr_logger.record_metric("eigensolves", float(family.eigensolves))
    nr_logger.log_action("range_boundary", "SAMPLED", {"dim": t.shape[0], "samples": n_samples, "shape": shape})
    return RangeBoundary(samples=samples, shape=shape, endpoints=endpoints, eigenvalues=np.linalg.eigvals(t))


def _segment_distance(z: complex, start: complex, end: complex) -> float:
    d = end - start
    if d == 0:
        return abs(z - start)
    s = ((z - start) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(z - (start + s * d))


def in_range(matrix, z: complex, tol: float = Settings.DEFAULT_TOL) -> Membership:
    """
    Support-function membership test for z against W(T).
    inside: Re(e^{i theta} z) <= h(theta) - tol for every theta (certified);
    outside: some theta violates by at least tol; uncertain otherwise.
    tol = 0 decides every point off the boundary.
    """
    t = _square(matrix)
    if tol < 0:
        raise PreconditionError(f"tol must be nonnegative, got {tol!r}")
    z = complex(z)

    shape, endpoints = range_shape(t)
    if shape != "region":
        # measure-zero range: 1-D test, nothing is interior in the plane
        distance = _segment_distance(z, *endpoints)
        if tol == 0:
            slack = 8.0 * EPS * max(op_norm(t).value, abs(z), 1.0)
            return Membership.INSIDE if distance <= slack else Membership.OUTSIDE
        return Membership.OUTSIDE if distance >= tol else Membership.UNCERTAIN

    # z interior  <=>  max_theta lambda_min(Re(e^{i theta}(T - z))) < 0
    shifted = as_matrix(t - z * np.eye(t.shape[0]))
    family = _SupportFamily.for_matrix(shifted, "re")
    outcome = _run_scan(
        family,
        "bottom",
        Settings.DEFAULT_TOL,
        bound_stop=-tol,
        objective_stop=tol if tol > 0 else None,
    )
    if tol > 0:
        inside, outside = outcome.upper <= -tol, outcome.lower >= tol
    else:
        inside, outside = outcome.upper < 0, outcome.lower > 0
    if inside:
        return Membership.INSIDE
    if outside:
        return Membership.OUTSIDE
    return Membership.UNCERTAIN
