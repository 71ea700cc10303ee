import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from evaluation.ensembles import EnsembleConfig, EnsembleKind, gen_random, ginibre, philox

# coarse tolerance for disk-shaped ranges (nilpotent inputs) keeps tests quick
DISK_TOL = 1e-7


@pytest.fixture
def shift():
    return np.array([[0, 1], [0, 0]], dtype=np.complex128)


@pytest.fixture
def diag_i1():
    return np.diag([1j, 1.0])


@pytest.fixture
def eye2():
    return np.eye(2, dtype=np.complex128)


@pytest.fixture
def row37_blocks():
    a = np.array([[0, 0], [3, 1]], dtype=np.complex128)
    b = np.array([[1, 2], [0, 0]], dtype=np.complex128)
    return a, b


@pytest.fixture
def rng():
    return philox(20240611)


def ginibre_matrix(seed: int, n: int) -> np.ndarray:
    return np.array(ginibre(philox(seed), n, n))


def haar(seed: int, n: int) -> np.ndarray:
    return np.array(gen_random(EnsembleConfig(kind=EnsembleKind.HAAR_UNITARY, dim=n, seed=seed)))


_entries = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw, min_dim: int = 1, max_dim: int = 4):
    n = draw(st.integers(min_value=min_dim, max_value=max_dim))
    re = draw(arrays(np.float64, (n, n), elements=_entries))
    im = draw(arrays(np.float64, (n, n), elements=_entries))
    return re + 1j * im


seeds = st.integers(min_value=0, max_value=2**32 - 1)
