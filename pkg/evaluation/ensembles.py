"""
Random matrix ensembles for the verification harness.

Every draw is a pure function of (kind, dim, seed): the bit stream comes from
the counter-based Philox generator keyed by the seed, and Gaussians are
produced by Box-Muller from that stream in row-major order.
"""

import math
from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from tools.matrix_core import ComplexMatrix, as_matrix


class EnsembleKind(str, Enum):
    GINIBRE = "ginibre"
    HAAR_UNITARY = "haar_unitary"
    HERMITIAN = "hermitian"
    NILPOTENT_JORDAN = "nilpotent_jordan"
    SHIFTED_SCALED = "shifted_scaled"


class EnsembleConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: EnsembleKind
    dim: PositiveInt
    seed: int = Field(ge=0, lt=2**64)

    def fingerprint(self, draw: int = 0) -> str:
        """Enough to regenerate the draw exactly"""
        return f"{self.kind.value}:n={self.dim}:seed={self.seed}:draw={draw}"


def philox(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def derive_seed(seed: int, *path: int) -> int:
    """Independent 64-bit seed for a (trial, slot, ...) path below the suite seed"""
    return int(np.random.SeedSequence((seed,) + tuple(path)).generate_state(1, dtype=np.uint64)[0])


def complex_gaussians(rng: np.random.Generator, count: int) -> np.ndarray:
    """Standard complex normals (E|z|^2 = 1) via Box-Muller, one uniform pair per entry"""
    u = rng.random((count, 2))
    radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
    angle = 2.0 * math.pi * u[:, 1]
    return (radius * np.cos(angle) + 1j * radius * np.sin(angle)) / math.sqrt(2.0)


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> ComplexMatrix:
    return as_matrix(complex_gaussians(rng, rows * cols).reshape(rows, cols))


def unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = complex_gaussians(rng, dim)
    return v / np.linalg.norm(v)


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(np.array(ginibre(rng, n, n)))
    d = np.diagonal(r)
    phases = np.where(d == 0, 1.0, d / np.abs(d))
    return q * phases


def _shift_scale(rng: np.random.Generator) -> Tuple[complex, complex]:
    alpha, beta = complex_gaussians(rng, 2)
    return complex(alpha), complex(beta)


def gen_random(cfg: EnsembleConfig) -> ComplexMatrix:
    """Deterministic draw from the configured ensemble"""
    n = cfg.dim
    if cfg.kind is EnsembleKind.NILPOTENT_JORDAN:
        return as_matrix(np.eye(n, k=1))

    rng = philox(cfg.seed)
    if cfg.kind is EnsembleKind.GINIBRE:
        return ginibre(rng, n, n)
    if cfg.kind is EnsembleKind.HAAR_UNITARY:
        return as_matrix(_haar_unitary(rng, n))
    if cfg.kind is EnsembleKind.HERMITIAN:
        g = np.array(ginibre(rng, n, n))
        return as_matrix((g + g.conj().T) / 2)
    # shifted_scaled: G first, then alpha and beta from the same stream
    g = np.array(ginibre(rng, n, n))
    alpha, beta = _shift_scale(rng)
    return as_matrix(alpha * g + beta * np.eye(n))
