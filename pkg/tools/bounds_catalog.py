"""
NumRange Toolkit - Bounds catalog
One evaluator per numerical-radius inequality. Each returns tagged
BoundEvaluation records; pointwise inequalities return residuals.

Values built from certified ingredients are rounded outward: a lower bound
uses the lower ends of its increasing ingredients and the upper ends of its
decreasing ones, and an upper bound does the opposite.
"""

import math
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from config.settings import Settings
from observability.logger import nr_logger
from tools.block_builder import (
    BlockSpec,
    PinchMode,
    anti_diagonal,
    assemble,
    first_row,
    off_diagonal,
    pinch,
    two_by_two,
)
from tools.errors import PreconditionError, ShapeError
from tools.matrix_core import (
    CertifiedValue,
    ComplexMatrix,
    adjoint,
    as_matrix,
    as_vector,
    cartesian_parts,
    is_zero,
    min_norm,
    op_norm,
    require_square,
    spectral_radius,
)
from tools.range_analysis import crawford_number, numerical_radius, support_scan


class Direction(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    EQUALITY = "equality"
    POINTWISE = "pointwise"


class RowBoundTerms(BaseModel):
    """alpha_k, beta_k per block row"""

    model_config = ConfigDict(frozen=True)

    alpha: List[float]
    beta: List[float]


class BoundEvaluation(BaseModel):
    """
    One inequality instance. `target` names the bounded quantity; `target_value`
    and `slack` are filled once a certified reference is known.
    slack = target - value for lower bounds, value - target for upper bounds.
    """

    model_config = ConfigDict(frozen=True)

    bound_id: str
    direction: Direction
    value: Optional[float]
    reference: str
    applicable: bool = True
    target: str = "w(T)"
    target_value: Optional[float] = None
    scale: float = 1.0
    slack: Optional[float] = None
    terms: Optional[RowBoundTerms] = None

    def with_target(self, target_value: float) -> "BoundEvaluation":
        if not self.applicable or self.value is None:
            return self.model_copy(update={"target_value": target_value})
        if self.direction is Direction.LOWER:
            slack = target_value - self.value
        elif self.direction is Direction.UPPER:
            slack = self.value - target_value
        else:
            slack = -abs(self.value - target_value)
        return self.model_copy(update={"target_value": target_value, "slack": slack})


class PointwiseResidual(BaseModel):
    """rhs - lhs of a vector inequality at one unit vector"""

    model_config = ConfigDict(frozen=True)

    lemma_id: str
    lhs: float
    rhs: float
    residual: float
    scale: float


def attach_targets(evaluations: Sequence[BoundEvaluation], target_value: float) -> List[BoundEvaluation]:
    """Fill target_value and slack for every evaluation sharing one target"""
    return [e.with_target(target_value) for e in evaluations]


class BoundsCatalog:
    """
    Evaluators for lower and upper bounds on numerical radii of single
    operators, products, sandwiches and block operator matrices.
    """

    # Citation strings: the inequality each bound_id evaluates
    REFERENCES: Dict[str, str] = {
        # single operator
        "half_norm": "w(T) >= ||T||/2",
        "spectral": "w(T) >= r(T)",
        "re_part": "w(T) >= ||Re T||",
        "im_part": "w(T) >= ||Im T||",
        "eq2": "w(T) >= ||T||/2 + m(T^2)/(2||T||)",
        "eq3": "w(T) >= (c^2(T) + w(T^2))/(2||T||)",
        "cor210": "w(T) >= max{||T||^2 + m(T^2), c^2(T) + w(T^2)}/(2||T||)",
        "norm": "w(T) <= ||T||",
        "lem31": "w^2(T) <= ||Re T||^2 + ||Im T||^2",
        "thm214": "w^4(T) <= max{(||Re T||^2 - m^2(Im T))^2, (||Im T||^2 - m^2(Re T))^2} + 4||Re T||^2||Im T||^2",
        # products
        "cor24a": "w(AB) <= 2w(A)||B|| - m(B*A)",
        "cor24b": "w(AB) <= 2w(B)||A|| - m(BA*)",
        "rem25a": "w(AB) <= 2w(A)||B||",
        "rem25b": "w(AB) <= 2w(B)||A||",
        "rem25c": "w(AB) <= 4w(A)w(B)",
        # sandwiches
        "thm23a": "m(A*TB) + w(B*TA) <= 2w(T)||A||||B||",
        "thm23b": "m(B*TA) + w(A*TB) <= 2w(T)||A||||B||",
        "thm212p": "w(A*TB + B*TA) <= 2w(T)||A||||B||",
        "thm212m": "w(A*TB - B*TA) <= 2w(T)||A||||B||",
        # pointwise
        "lem21": "||Tx||^2 + |<T^2x,x>| <= 2w(T)||Tx||||x||",
        "lem22": "|<A*TBx,x>| + |<B*TAx,x>| <= 2w(T)||Ax||||Bx||",
        "lem211p": "|<(A*TB + B*TA)x,x>| <= 2w(T)||Ax||||Bx||",
        "lem211m": "|<(A*TB - B*TA)x,x>| <= 2w(T)||Ax||||Bx||",
        # off-diagonal [[0, A], [B, 0]]
        "thm26i": "2w([[0,A],[B,0]]) >= (||A||^2 + m(BA))/||A||",
        "thm26ii": "2w([[0,A],[B,0]]) >= (c^2(A) + w(BA))/||A||",
        "thm26iii": "2w([[0,A],[B,0]]) >= (||B||^2 + m(AB))/||B||",
        "thm26iv": "2w([[0,A],[B,0]]) >= (c^2(B) + w(AB))/||B||",
        "thm45": "w([[0,A],[B,0]]) >= max{w(A+B), w(A-B)}/2",
        # first block row [[A, B], [0, 0]]
        "thm35": "w^2([[A,B],[0,0]]) <= w^2(A) + ||B||(w(A) + ||B||/2)/2",
        "thm37": "w^2([[A,B],[0,0]]) <= 2w^2(A) + (||A*B|| + ||B||^2)/2",
        "thm44": "w([[A,B],[0,0]]) >= max{w(A+B), w(A-B)}/2",
        "thm32": "w(first-row matrix) <= sqrt(alpha^2 + beta^2)/2",
        "thm33": "w((A_ij)) <= sum_k sqrt(alpha_k^2 + beta_k^2)/2",
        # 2x2 [[A, B], [C, D]]
        "cor36": "w([[A,B],[C,D]]) <= row-wise sum of sqrt(w^2 + ||.||(w + ||.||/2)/2) terms",
        "cor38": "w([[A,B],[C,D]]) <= row-wise sum of sqrt(2w^2 + (||A*B|| + ||B||^2)/2) terms",
        "cor42": "w([[A,B],[C,D]]) >= max{w(A), w(D), sqrt(w(BC+CB)/2), sqrt(w(BC-CB)/2)}",
        "pinch_diag": "w([[A,B],[C,D]]) >= w([[A,0],[0,D]])",
        "pinch_off": "w([[A,B],[C,D]]) >= w([[0,B],[C,0]])",
        "thm41": "w(anti-diagonal) >= max_i sqrt(w(A_i A_j +- A_j A_i)/2), j = n+1-i",
        "lem43": "w([[A,B],[B,A]]) = max{w(A+B), w(A-B)}",
        # equality case w = ||T||/2
        "thm29": "w([[0,s],[0,0]] (+) sB) = s/2 whenever w(B) <= 1/2",
        "thm29m": "w(T) = ||T||/2 implies m(T^2) = 0",
    }

    # Comparison constants quoted for the worked examples
    PRIOR_THM37_EXAMPLE = (12.0 + math.sqrt(10.0)) / 4.0
    PRIOR_COR42_EXAMPLE = 1.5

    def __init__(self, tol: float = Settings.DEFAULT_TOL):
        self.name = "BoundsCatalog"
        self.tol = tol
        nr_logger.log_action(self.name, "INITIALIZED", {"bounds": len(self.REFERENCES), "tol": tol})

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------

    def _w(self, matrix, tol: Optional[float]) -> CertifiedValue:
        return numerical_radius(matrix, tol=tol or self.tol)

    def _m(self, matrix, tol: Optional[float]) -> CertifiedValue:
        return crawford_number(matrix, tol=tol or self.tol)

    def _record(
        self,
        bound_id: str,
        direction: Direction,
        value: Optional[float],
        target: str,
        scale: float,
        applicable: bool = True,
        terms: Optional[RowBoundTerms] = None,
    ) -> BoundEvaluation:
        if applicable and (value is None or not math.isfinite(value)):
            raise PreconditionError(f"{bound_id}: applicable bound evaluated to {value!r}")
        return BoundEvaluation(
            bound_id=bound_id,
            direction=direction,
            value=float(value) if applicable else None,
            reference=self.REFERENCES[bound_id],
            applicable=applicable,
            target=target,
            scale=max(scale, Settings.SIGMA_FLOOR),
            terms=terms,
        )

    @staticmethod
    def _square_pair(a, b, what: str) -> Tuple[ComplexMatrix, ComplexMatrix]:
        a_, b_ = as_matrix(a, "A"), as_matrix(b, "B")
        require_square(a_, "A")
        require_square(b_, "B")
        if a_.shape != b_.shape:
            raise ShapeError(f"{what}: A and B must share one square shape, got {a_.shape} and {b_.shape}")
        return a_, b_

    @staticmethod
    def _sorted(evaluations: List[BoundEvaluation]) -> List[BoundEvaluation]:
        return sorted(evaluations, key=lambda e: e.bound_id)

    # ------------------------------------------------------------------
    # single operator
    # ------------------------------------------------------------------

    def scalar_bounds(self, matrix, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """Lower and upper bounds on w(T) from norms, Crawford numbers and Cartesian parts"""
        t = as_matrix(matrix, "T")
        require_square(t, "T")
        norm = op_norm(t)
        scale = norm.value
        parts = cartesian_parts(t)
        n_re, n_im = op_norm(parts.re), op_norm(parts.im)
        m_re, m_im = self._m(parts.re, tol), self._m(parts.im, tol)
        nonzero = not is_zero(t)

        rows = [
            self._record("half_norm", Direction.LOWER, norm.lower / 2, "w(T)", scale),
            self._record("spectral", Direction.LOWER, spectral_radius(t).lower, "w(T)", scale),
            self._record("re_part", Direction.LOWER, n_re.lower, "w(T)", scale),
            self._record("im_part", Direction.LOWER, n_im.lower, "w(T)", scale),
            self._record("norm", Direction.UPPER, norm.upper, "w(T)", scale),
            self._record("lem31", Direction.UPPER, math.hypot(n_re.upper, n_im.upper), "w(T)", scale),
        ]

        # (a - b)^2 over a in [a_lo, a_hi], b in [b_lo, b_hi] is largest at a corner
        def widest_gap(n: CertifiedValue, m: CertifiedValue) -> float:
            return max(abs(n.upper**2 - m.lower**2), abs(n.lower**2 - m.upper**2)) ** 2

        fourth = max(widest_gap(n_re, m_im), widest_gap(n_im, m_re)) + 4.0 * n_re.upper**2 * n_im.upper**2
        rows.append(self._record("thm214", Direction.UPPER, fourth**0.25, "w(T)", scale))

        if nonzero:
            t2 = t @ t
            c = min_norm(t)
            eq2 = norm.lower / 2 + self._m(t2, tol).lower / (2 * norm.upper)
            eq3 = (c.lower**2 + self._w(t2, tol).lower) / (2 * norm.upper)
            rows += [
                self._record("eq2", Direction.LOWER, eq2, "w(T)", scale),
                self._record("eq3", Direction.LOWER, eq3, "w(T)", scale),
                self._record("cor210", Direction.LOWER, max(eq2, eq3), "w(T)", scale),
            ]
        else:
            rows += [
                self._record(bound_id, Direction.LOWER, None, "w(T)", scale, applicable=False)
                for bound_id in ("eq2", "eq3", "cor210")
            ]
        return self._sorted(rows)

    def product_upper(self, a, b, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """Upper bounds on w(AB)"""
        a_, b_ = self._square_pair(a, b, "product_upper")
        n_a, n_b = op_norm(a_), op_norm(b_)
        w_a, w_b = self._w(a_, tol), self._w(b_, tol)
        m_ba = self._m(adjoint(b_) @ a_, tol)
        m_ab = self._m(b_ @ adjoint(a_), tol)
        scale = n_a.value * n_b.value
        target = "w(AB)"
        rows = [
            self._record("cor24a", Direction.UPPER, 2 * w_a.upper * n_b.upper - m_ba.lower, target, scale),
            self._record("cor24b", Direction.UPPER, 2 * w_b.upper * n_a.upper - m_ab.lower, target, scale),
            self._record("rem25a", Direction.UPPER, 2 * w_a.upper * n_b.upper, target, scale),
            self._record("rem25b", Direction.UPPER, 2 * w_b.upper * n_a.upper, target, scale),
            self._record("rem25c", Direction.UPPER, 4 * w_a.upper * w_b.upper, target, scale),
        ]
        return self._sorted(rows)

    def sandwich_bounds(self, a, t, b, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """
        Operator-level sandwich inequalities; value is the right-hand side and
        target_value the computed left-hand side, so slack = RHS - LHS.
        """
        a_, b_ = self._square_pair(a, b, "sandwich_bounds")
        t_ = as_matrix(t, "T")
        require_square(t_, "T")
        if t_.shape != a_.shape:
            raise ShapeError(f"sandwich_bounds: T has shape {t_.shape}, A and B have {a_.shape}")

        n_a, n_b = op_norm(a_), op_norm(b_)
        w_t = self._w(t_, tol)
        atb = adjoint(a_) @ t_ @ b_
        bta = adjoint(b_) @ t_ @ a_
        rhs = 2 * w_t.upper * n_a.upper * n_b.upper
        scale = max(op_norm(t_).value * n_a.value * n_b.value, Settings.SIGMA_FLOOR)

        sides = {
            "thm23a": ("m(A*TB) + w(B*TA)", self._m(atb, tol).value + self._w(bta, tol).value),
            "thm23b": ("m(B*TA) + w(A*TB)", self._m(bta, tol).value + self._w(atb, tol).value),
            "thm212p": ("w(A*TB + B*TA)", self._w(atb + bta, tol).value),
            "thm212m": ("w(A*TB - B*TA)", self._w(atb - bta, tol).value),
        }
        rows = [
            self._record(bound_id, Direction.UPPER, rhs, target, scale).with_target(lhs)
            for bound_id, (target, lhs) in sides.items()
        ]
        return self._sorted(rows)

    def pointwise_check(self, a, t, b, x, tol: Optional[float] = None) -> List[PointwiseResidual]:
        """Residuals rhs - lhs of the vector inequalities at the unit vector x"""
        t_ = as_matrix(t, "T")
        require_square(t_, "T")
        a_, b_ = self._square_pair(a, b, "pointwise_check")
        if t_.shape != a_.shape:
            raise ShapeError(f"pointwise_check: T has shape {t_.shape}, A and B have {a_.shape}")
        x_ = as_vector(x, "x")
        if x_.shape[0] != t_.shape[0]:
            raise ShapeError(f"pointwise_check: x has length {x_.shape[0]}, expected {t_.shape[0]}")
        if abs(np.linalg.norm(x_) - 1.0) > Settings.UNIT_VECTOR_TOL:
            raise PreconditionError(f"x must be a unit vector, got ||x|| = {np.linalg.norm(x_):.17g}")

        w_t = self._w(t_, tol).upper
        n_t = op_norm(t_).value
        n_a, n_b = op_norm(a_).value, op_norm(b_).value

        tx = t_ @ x_
        norm_tx = float(np.linalg.norm(tx))
        ax, bx = a_ @ x_, b_ @ x_
        norm_ax, norm_bx = float(np.linalg.norm(ax)), float(np.linalg.norm(bx))
        # <A*TBx, x> = <TBx, Ax>
        atb = complex(np.vdot(ax, t_ @ bx))
        bta = complex(np.vdot(bx, t_ @ ax))
        pair_rhs = 2 * w_t * norm_ax * norm_bx
        pair_scale = max(n_t * n_a * n_b, Settings.SIGMA_FLOOR)

        checks = [
            ("lem21", norm_tx**2 + abs(complex(np.vdot(x_, t_ @ tx))), 2 * w_t * norm_tx, max(n_t**2, Settings.SIGMA_FLOOR)),
            ("lem22", abs(atb) + abs(bta), pair_rhs, pair_scale),
            ("lem211p", abs(atb + bta), pair_rhs, pair_scale),
            ("lem211m", abs(atb - bta), pair_rhs, pair_scale),
        ]
        return [
            PointwiseResidual(lemma_id=lemma_id, lhs=lhs, rhs=rhs, residual=rhs - lhs, scale=scale)
            for lemma_id, lhs, rhs, scale in checks
        ]

    # ------------------------------------------------------------------
    # block operator matrices
    # ------------------------------------------------------------------

    def offdiag_lower(self, a, b, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """Lower bounds on w([[0, A], [B, 0]])"""
        a_, b_ = self._square_pair(a, b, "offdiag_lower")
        n_a, n_b = op_norm(a_), op_norm(b_)
        scale = max(n_a.value, n_b.value)
        target = "w([[0,A],[B,0]])"
        rows = []

        if is_zero(a_):
            rows += [self._record(i, Direction.LOWER, None, target, scale, applicable=False) for i in ("thm26i", "thm26ii")]
        else:
            ba = b_ @ a_
            c_a = min_norm(a_)
            rows.append(
                self._record("thm26i", Direction.LOWER, (n_a.lower**2 + self._m(ba, tol).lower) / (2 * n_a.upper), target, scale)
            )
            rows.append(
                self._record("thm26ii", Direction.LOWER, (c_a.lower**2 + self._w(ba, tol).lower) / (2 * n_a.upper), target, scale)
            )

        if is_zero(b_):
            rows += [self._record(i, Direction.LOWER, None, target, scale, applicable=False) for i in ("thm26iii", "thm26iv")]
        else:
            ab = a_ @ b_
            c_b = min_norm(b_)
            rows.append(
                self._record("thm26iii", Direction.LOWER, (n_b.lower**2 + self._m(ab, tol).lower) / (2 * n_b.upper), target, scale)
            )
            rows.append(
                self._record("thm26iv", Direction.LOWER, (c_b.lower**2 + self._w(ab, tol).lower) / (2 * n_b.upper), target, scale)
            )

        half_sum = 0.5 * max(self._w(a_ + b_, tol).lower, self._w(a_ - b_, tol).lower)
        rows.append(self._record("thm45", Direction.LOWER, half_sum, target, scale))
        return self._sorted(rows)

    def offdiag_theta_sup(self, a, b, sign: int = 1, part: str = "re", tol: Optional[float] = None) -> CertifiedValue:
        """
        (1/2) sup_theta ||Re(e^{i theta} A) +- Re(e^{i theta} B)|| (or the Im form),
        scanned on the Hermitian pencil built from the Cartesian parts.
        """
        a_, b_ = self._square_pair(a, b, "offdiag_theta_sup")
        if sign not in (1, -1):
            raise PreconditionError(f"sign must be +1 or -1, got {sign!r}")
        pa, pb = cartesian_parts(a_), cartesian_parts(b_)
        re_part = pa.re + sign * pb.re
        im_part = pa.im + sign * pb.im
        if part == "re":
            p, q = re_part, im_part
        elif part == "im":
            # Im(e^{i theta} X) = cos(theta) Im X + sin(theta) Re X
            p, q = im_part, -re_part
        else:
            raise PreconditionError(f"part must be 're' or 'im', got {part!r}")
        sup = support_scan(p, q, tol=tol or self.tol)
        return CertifiedValue(value=sup.value / 2, lower=sup.lower / 2, upper=sup.upper / 2, theta_star=sup.theta_star)

    def row_bounds(self, a, b, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """Bounds on w([[A, B], [0, 0]]) for square A and B with A's row count"""
        a_, b_ = as_matrix(a, "A"), as_matrix(b, "B")
        require_square(a_, "A")
        if b_.shape[0] != a_.shape[0]:
            raise ShapeError(f"row_bounds: B has {b_.shape[0]} rows, A has {a_.shape[0]}")

        w_a = self._w(a_, tol).upper
        n_b = op_norm(b_).upper
        n_ab = op_norm(adjoint(a_) @ b_).upper
        row = BlockSpec(
            n=2, row_dims=[a_.shape[0], b_.shape[1]], col_dims=[a_.shape[1], b_.shape[1]], blocks=[[a_, b_], [None, None]]
        )
        scale = op_norm(assemble(row)).value
        target = "w([[A,B],[0,0]])"

        rows = [
            self._record("thm35", Direction.UPPER, math.sqrt(w_a**2 + 0.5 * n_b * (w_a + 0.5 * n_b)), target, scale),
            self._record("thm37", Direction.UPPER, math.sqrt(2 * w_a**2 + 0.5 * (n_ab + n_b**2)), target, scale),
        ]
        if b_.shape == a_.shape:
            half_sum = 0.5 * max(self._w(a_ + b_, tol).lower, self._w(a_ - b_, tol).lower)
            rows.append(self._record("thm44", Direction.LOWER, half_sum, target, scale))
        else:
            rows.append(self._record("thm44", Direction.LOWER, None, target, scale, applicable=False))
        return self._sorted(rows)

    @staticmethod
    def _row_terms(diagonal: ComplexMatrix, others: Sequence[ComplexMatrix]) -> Tuple[float, float]:
        parts = cartesian_parts(diagonal)
        n_re, n_im = op_norm(parts.re).upper, op_norm(parts.im).upper
        rest = sum(op_norm(m).upper ** 2 for m in others if m.size)
        alpha = n_re + math.sqrt(n_re**2 + rest)
        beta = n_im + math.sqrt(n_im**2 + rest)
        return alpha, beta

    def firstrow_upper(self, blocks: Sequence[object]) -> BoundEvaluation:
        """Upper bound on w of the first-row operator matrix [A_11 ... A_1n; 0]"""
        spec = first_row(blocks)
        mats = [spec.block(0, j) for j in range(spec.n)]
        alpha, beta = self._row_terms(mats[0], mats[1:])
        scale = op_norm(assemble(spec)).value
        return self._record(
            "thm32",
            Direction.UPPER,
            0.5 * math.hypot(alpha, beta),
            "w(first-row matrix)",
            scale,
            terms=RowBoundTerms(alpha=[alpha], beta=[beta]),
        )

    def grid_upper(self, spec: BlockSpec) -> BoundEvaluation:
        """Row-by-row upper bound on w((A_ij)) for a block-square grid"""
        if not spec.is_block_square:
            raise ShapeError(f"grid_upper needs a block-square spec, got rows {spec.row_dims} and cols {spec.col_dims}")
        alphas, betas = [], []
        for k in range(spec.n):
            alpha, beta = self._row_terms(spec.block(k, k), [spec.block(k, j) for j in range(spec.n) if j != k])
            alphas.append(alpha)
            betas.append(beta)
        total = sum(0.5 * math.hypot(a, b) for a, b in zip(alphas, betas))
        scale = op_norm(assemble(spec)).value
        return self._record(
            "thm33", Direction.UPPER, total, "w((A_ij))", scale, terms=RowBoundTerms(alpha=alphas, beta=betas)
        )

    def two_by_two_bounds(self, a, b, c, d, tol: Optional[float] = None) -> List[BoundEvaluation]:
        """Bounds on w([[A, B], [C, D]]) including both pinchings"""
        spec = two_by_two(a, b, c, d)
        if not spec.is_block_square:
            raise ShapeError(f"two_by_two_bounds needs square diagonal blocks, got {spec.row_dims} x {spec.col_dims}")
        a_, b_, c_, d_ = spec.block(0, 0), spec.block(0, 1), spec.block(1, 0), spec.block(1, 1)
        scale = op_norm(assemble(spec)).value
        target = "w([[A,B],[C,D]])"

        w_a, w_d = self._w(a_, tol), self._w(d_, tol)
        n_b, n_c = op_norm(b_).upper, op_norm(c_).upper

        def row35(w: float, n: float) -> float:
            return math.sqrt(w**2 + 0.5 * n * (w + 0.5 * n))

        def row37(w: float, n_cross: float, n: float) -> float:
            return math.sqrt(2 * w**2 + 0.5 * (n_cross + n**2))

        cor36 = row35(w_a.upper, n_b) + row35(w_d.upper, n_c)
        cor38 = row37(w_a.upper, op_norm(adjoint(a_) @ b_).upper, n_b) + row37(
            w_d.upper, op_norm(adjoint(d_) @ c_).upper, n_c
        )
        rows = [
            self._record("cor36", Direction.UPPER, cor36, target, scale),
            self._record("cor38", Direction.UPPER, cor38, target, scale),
            self._record(
                "pinch_diag", Direction.LOWER, self._w(assemble(pinch(spec, PinchMode.DIAGONAL)), tol).lower, target, scale
            ),
            self._record(
                "pinch_off", Direction.LOWER, self._w(assemble(pinch(spec, PinchMode.OFFDIAGONAL)), tol).lower, target, scale
            ),
        ]

        if len({m.shape for m in (a_, b_, c_, d_)}) == 1:
            bc, cb = b_ @ c_, c_ @ b_
            cor42 = max(
                w_a.lower,
                w_d.lower,
                math.sqrt(self._w(bc + cb, tol).lower / 2),
                math.sqrt(self._w(bc - cb, tol).lower / 2),
            )
            rows.append(self._record("cor42", Direction.LOWER, cor42, target, scale))
        else:
            rows.append(self._record("cor42", Direction.LOWER, None, target, scale, applicable=False))
        return self._sorted(rows)

    def antidiag_lower(self, blocks: Sequence[object], tol: Optional[float] = None) -> BoundEvaluation:
        """Lower bound on w of the block anti-diagonal matrix built from A_1..A_n"""
        matrix = anti_diagonal(blocks)
        mats = [as_matrix(blk) for blk in blocks]
        n = len(mats)
        best = 0.0
        for i in range(n):
            x, y = mats[i], mats[n - 1 - i]
            best = max(best, self._w(x @ y + y @ x, tol).lower, self._w(x @ y - y @ x, tol).lower)
        return self._record(
            "thm41", Direction.LOWER, math.sqrt(best / 2), "w(anti-diagonal)", op_norm(matrix).value
        )

    def sym_block_equality(self, a, b, tol: Optional[float] = None) -> Tuple[float, float]:
        """(w([[A, B], [B, A]]), max(w(A + B), w(A - B)))"""
        a_, b_ = self._square_pair(a, b, "sym_block_equality")
        lhs = self._w(assemble(two_by_two(a_, b_, b_, a_)), tol).value
        rhs = max(self._w(a_ + b_, tol).value, self._w(a_ - b_, tol).value)
        return lhs, rhs

    def off_diagonal_radius(self, a, b, tol: Optional[float] = None) -> CertifiedValue:
        """Certified w([[0, A], [B, 0]]), the target of offdiag_lower"""
        return self._w(off_diagonal(a, b), tol)


# Global instance
bounds_catalog = BoundsCatalog()
