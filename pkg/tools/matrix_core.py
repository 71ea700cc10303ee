"""
NumRange Toolkit - Dense complex matrix core
Matrix algebra and the spectral primitives (singular-value extremes,
Hermitian eigenvalue extremes, spectral radius) every other module consumes.
"""

from typing import Any, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, model_validator

from config.settings import Settings
from observability.logger import nr_logger
from tools.errors import PreconditionError, ShapeError

ComplexMatrix = NDArray[np.complex128]
ComplexVector = NDArray[np.complex128]

EPS = float(np.finfo(np.float64).eps)


class CertifiedValue(BaseModel):
    """A computed scalar with an enclosing interval and optional witness"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: float
    lower: float
    upper: float
    theta_star: Optional[float] = None
    witness: Optional[np.ndarray] = None

    @model_validator(mode="after")
    def _check_enclosure(self):
        if not (self.lower <= self.value <= self.upper):
            raise ValueError(f"enclosure violated: {self.lower} <= {self.value} <= {self.upper}")
        return self

    @classmethod
    def exact(cls, value: float, **kwargs) -> "CertifiedValue":
        return cls(value=value, lower=value, upper=value, **kwargs)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def summary(self) -> dict:
        """JSON-friendly view without the witness vector"""
        data = {"value": self.value, "lower": self.lower, "upper": self.upper}
        if self.theta_star is not None:
            data["theta_star"] = self.theta_star
        return data


class CartesianPair(BaseModel):
    """Re(T) and Im(T), both Hermitian"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    re: np.ndarray
    im: np.ndarray


class EigenExtremes(BaseModel):
    """Extremal eigenpairs of a Hermitian matrix"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lambda_min: float
    lambda_max: float
    v_min: np.ndarray
    v_max: np.ndarray


def freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def as_matrix(data: Any, name: str = "matrix", allow_empty: bool = False) -> ComplexMatrix:
    """Validate and copy into a read-only complex128 2-D array; scalars become 1x1"""
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2:
        raise ShapeError(f"{name} must be 2-dimensional, got shape {matrix.shape}")
    if not allow_empty and 0 in matrix.shape:
        raise ShapeError(f"{name} must have positive dimensions, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise PreconditionError(f"{name} has non-finite entries")
    return freeze(matrix)


def as_vector(data: Any, name: str = "vector") -> ComplexVector:
    vector = np.array(data, dtype=np.complex128)
    if vector.ndim != 1 or vector.size == 0:
        raise ShapeError(f"{name} must be a nonempty 1-D array, got shape {vector.shape}")
    if not np.all(np.isfinite(vector)):
        raise PreconditionError(f"{name} has non-finite entries")
    return freeze(vector)


def require_square(matrix: ComplexMatrix, name: str = "matrix") -> None:
    if matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {matrix.shape}")


def is_zero(matrix: ComplexMatrix) -> bool:
    return not np.any(matrix)


def max_abs(matrix: ComplexMatrix) -> float:
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def rayleigh(matrix: ComplexMatrix, x: ComplexVector) -> complex:
    """<Mx, x> for a vector x (not normalised)"""
    return complex(np.vdot(x, matrix @ x))


# ----------------------------------------------------------------------------
# Algebra
# ----------------------------------------------------------------------------


def adjoint(matrix: Any) -> ComplexMatrix:
    m = as_matrix(matrix, allow_empty=True)
    return freeze(m.conj().T.copy())


def _same_shape(a: ComplexMatrix, b: ComplexMatrix, op: str) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"{op}: shapes {a.shape} and {b.shape} do not match")


def add(a: Any, b: Any) -> ComplexMatrix:
    a, b = as_matrix(a, "a", allow_empty=True), as_matrix(b, "b", allow_empty=True)
    _same_shape(a, b, "add")
    return freeze(a + b)


def sub(a: Any, b: Any) -> ComplexMatrix:
    a, b = as_matrix(a, "a", allow_empty=True), as_matrix(b, "b", allow_empty=True)
    _same_shape(a, b, "sub")
    return freeze(a - b)


def scale(alpha: complex, a: Any) -> ComplexMatrix:
    return freeze(complex(alpha) * as_matrix(a, allow_empty=True))


def matmul(*factors: Any) -> ComplexMatrix:
    """Left-to-right product; each adjacent pair must be conformable"""
    if not factors:
        raise ShapeError("matmul needs at least one factor")
    result = as_matrix(factors[0], "factor 0", allow_empty=True)
    for k, factor in enumerate(factors[1:], start=1):
        right = as_matrix(factor, f"factor {k}", allow_empty=True)
        if result.shape[1] != right.shape[0]:
            raise ShapeError(f"matmul: shapes {result.shape} and {right.shape} are not conformable")
        result = result @ right
    return freeze(np.array(result))


def direct_sum(*blocks: Any) -> ComplexMatrix:
    """Block-diagonal concatenation; 0x0 blocks are allowed and vanish"""
    mats = [as_matrix(b, f"block {k}", allow_empty=True) for k, b in enumerate(blocks)]
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    result = np.zeros((rows, cols), dtype=np.complex128)
    r = c = 0
    for m in mats:
        result[r : r + m.shape[0], c : c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return freeze(result)


def identity(n: int) -> ComplexMatrix:
    return freeze(np.eye(n, dtype=np.complex128))


def rotate(matrix: Any, theta: float) -> ComplexMatrix:
    """e^{i theta} T"""
    return freeze(np.exp(1j * theta) * as_matrix(matrix))


def cartesian_parts(matrix: Any) -> CartesianPair:
    """Re(T) = (T + T*)/2 and Im(T) = (T - T*)/(2i)"""
    t = as_matrix(matrix, "T")
    require_square(t, "T")
    t_star = t.conj().T
    return CartesianPair(re=freeze((t + t_star) / 2), im=freeze((t - t_star) / 2j))


# ----------------------------------------------------------------------------
# Spectral primitives
# ----------------------------------------------------------------------------


def _svd_values(m: ComplexMatrix) -> np.ndarray:
    return np.linalg.svd(m, compute_uv=False)


def op_norm(matrix: Any) -> CertifiedValue:
    """Largest singular value with a relative enclosure of a few ulps times the dimension"""
    m = as_matrix(matrix, allow_empty=True)
    if m.size == 0 or is_zero(m):
        return CertifiedValue.exact(0.0)
    sigma_max = float(_svd_values(m)[0])
    err = 4.0 * max(m.shape) * EPS * sigma_max
    return CertifiedValue(value=sigma_max, lower=max(0.0, sigma_max - err), upper=sigma_max + err)


def min_norm(matrix: Any) -> CertifiedValue:
    """c(M) = smallest singular value; 0 when M has more columns than rows"""
    m = as_matrix(matrix)
    rows, cols = m.shape
    if rows < cols or is_zero(m):
        return CertifiedValue.exact(0.0)
    sigma = _svd_values(m)
    sigma_max, sigma_min = float(sigma[0]), float(sigma[-1])
    floor = Settings.SIGMA_FLOOR * sigma_max
    if sigma_min <= floor:
        return CertifiedValue(value=0.0, lower=0.0, upper=floor)
    err = 4.0 * max(m.shape) * EPS * sigma_max
    return CertifiedValue(value=sigma_min, lower=max(0.0, sigma_min - err), upper=sigma_min + err)


def spectral_radius(matrix: Any) -> CertifiedValue:
    """max |lambda| with absolute accuracy 1e-9 * ||M||"""
    m = as_matrix(matrix)
    require_square(m)
    norm = op_norm(m)
    if norm.value == 0.0:
        return CertifiedValue.exact(0.0)
    radius = float(np.max(np.abs(np.linalg.eigvals(m))))
    err = max(1e-9 * norm.value, 4.0 * m.shape[0] * EPS * norm.value)
    value = min(radius, norm.upper)
    return CertifiedValue(value=value, lower=max(0.0, value - err), upper=min(value + err, norm.upper))


def check_hermitian(matrix: ComplexMatrix, name: str = "H") -> ComplexMatrix:
    """Reject matrices outside the Hermitian tolerance; return the symmetrised copy"""
    require_square(matrix, name)
    scale_ = max_abs(matrix)
    defect = max_abs(matrix - matrix.conj().T)
    if defect > Settings.HERMITIAN_TOL * scale_:
        raise PreconditionError(
            f"{name} is not Hermitian: max|H - H*| = {defect:.3e} exceeds {Settings.HERMITIAN_TOL:.0e} * {scale_:.3e}"
        )
    return freeze((matrix + matrix.conj().T) / 2)


def hermitian_extremes(matrix: Any) -> EigenExtremes:
    """lambda_min, lambda_max with unit eigenvector witnesses"""
    h = check_hermitian(as_matrix(matrix, "H"))
    values, vectors = np.linalg.eigh(h)
    nr_logger.record_metric("eigensolves", 1)
    return EigenExtremes(
        lambda_min=float(values[0]),
        lambda_max=float(values[-1]),
        v_min=freeze(vectors[:, 0].copy()),
        v_max=freeze(vectors[:, -1].copy()),
    )


def eigen_error(matrix: ComplexMatrix, norm_value: float) -> float:
    """Absolute error allowance for a dense Hermitian eigensolve"""
    return 8.0 * matrix.shape[0] * EPS * norm_value
