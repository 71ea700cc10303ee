"""
NumRange Toolkit - Block operator matrices
Assembly of n x n block operator matrices (first-row, anti-diagonal, 2x2 and
off-diagonal forms), the flip unitaries, pinching and the w(T) = ||T||/2
equality-case constructor.
"""

from enum import Enum
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from config.settings import Settings
from tools.errors import PreconditionError, ShapeError
from tools.matrix_core import ComplexMatrix, as_matrix, direct_sum, freeze, require_square
from tools.range_analysis import numerical_radius


class PinchMode(str, Enum):
    DIAGONAL = "diagonal"
    OFFDIAGONAL = "offdiagonal"


class BlockSpec(BaseModel):
    """
    n x n grid of optional blocks; None stands for a zero block of the
    shape fixed by row_dims[i] x col_dims[j].
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    row_dims: List[int]
    col_dims: List[int]
    blocks: List[List[Optional[np.ndarray]]]

    def __init__(self, **data):
        super().__init__(**data)
        # outside the validators: ShapeError must not arrive wrapped in a ValidationError
        self._check_grid()

    def _check_grid(self):
        if self.n < 1:
            raise ShapeError(f"block grid size must be positive, got {self.n}")
        if len(self.row_dims) != self.n or len(self.col_dims) != self.n:
            raise ShapeError(
                f"dimension vectors must have length {self.n}, got {len(self.row_dims)} and {len(self.col_dims)}"
            )
        if any(d < 0 for d in self.row_dims + self.col_dims):
            raise ShapeError("block dimensions must be nonnegative")
        if len(self.blocks) != self.n or any(len(row) != self.n for row in self.blocks):
            raise ShapeError(f"blocks must form a {self.n}x{self.n} grid")

        present = 0
        for i, row in enumerate(self.blocks):
            for j, block in enumerate(row):
                if block is None:
                    continue
                present += 1
                expected = (self.row_dims[i], self.col_dims[j])
                if block.shape != expected:
                    raise ShapeError(f"block ({i},{j}) has shape {block.shape}, expected {expected}")
        if present == 0:
            raise ShapeError("block spec needs at least one present block")
        return self

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[Optional[object]]]) -> "BlockSpec":
        """Build from a square grid of blocks, inferring dimensions from present blocks"""
        n = len(grid)
        mats = [[None if b is None else as_matrix(b, f"block ({i},{j})") for j, b in enumerate(row)] for i, row in enumerate(grid)]
        if any(len(row) != n for row in mats):
            raise ShapeError(f"blocks must form a {n}x{n} grid")
        row_dims = []
        col_dims = []
        for k in range(n):
            rows = {m.shape[0] for m in mats[k] if m is not None}
            cols = {row[k].shape[1] for row in mats if row[k] is not None}
            if len(rows) > 1:
                raise ShapeError(f"block row {k} has inconsistent heights {sorted(rows)}")
            if len(cols) > 1:
                raise ShapeError(f"block column {k} has inconsistent widths {sorted(cols)}")
            if not rows or not cols:
                raise ShapeError(f"cannot infer dimensions of block row/column {k}: all blocks absent")
            row_dims.append(rows.pop())
            col_dims.append(cols.pop())
        return cls(n=n, row_dims=row_dims, col_dims=col_dims, blocks=mats)

    def block(self, i: int, j: int) -> ComplexMatrix:
        """Block (i, j), materialising absent blocks as zeros"""
        b = self.blocks[i][j]
        if b is None:
            return freeze(np.zeros((self.row_dims[i], self.col_dims[j]), dtype=np.complex128))
        return b

    @property
    def is_block_square(self) -> bool:
        return self.row_dims == self.col_dims


def assemble(spec: BlockSpec) -> ComplexMatrix:
    """Dense matrix with the blocks placed; absent blocks are zero"""
    result = np.zeros((sum(spec.row_dims), sum(spec.col_dims)), dtype=np.complex128)
    row_offsets = np.concatenate([[0], np.cumsum(spec.row_dims)])
    col_offsets = np.concatenate([[0], np.cumsum(spec.col_dims)])
    for i, row in enumerate(spec.blocks):
        for j, block in enumerate(row):
            if block is not None:
                result[row_offsets[i] : row_offsets[i + 1], col_offsets[j] : col_offsets[j + 1]] = block
    return freeze(result)


def partition(matrix, row_blocks: int, col_blocks: int) -> BlockSpec:
    """Split M into an r x c grid of equal blocks (CLI --blocks)"""
    m = as_matrix(matrix, "M")
    rows, cols = m.shape
    if row_blocks < 1 or col_blocks < 1:
        raise PreconditionError(f"block grid must be positive, got {row_blocks}x{col_blocks}")
    if row_blocks != col_blocks:
        raise PreconditionError(f"block grid must be square, got {row_blocks}x{col_blocks}")
    if rows % row_blocks or cols % col_blocks:
        raise PreconditionError(f"shape {m.shape} does not divide into a {row_blocks}x{col_blocks} block grid")
    h, w = rows // row_blocks, cols // col_blocks
    grid = [
        [freeze(m[i * h : (i + 1) * h, j * w : (j + 1) * w].copy()) for j in range(col_blocks)]
        for i in range(row_blocks)
    ]
    return BlockSpec(n=row_blocks, row_dims=[h] * row_blocks, col_dims=[w] * col_blocks, blocks=grid)


def _equal_square(blocks: Sequence[object], what: str) -> List[ComplexMatrix]:
    mats = [as_matrix(b, f"{what} block {k}") for k, b in enumerate(blocks)]
    if not mats:
        raise ShapeError(f"{what} needs at least one block")
    for k, m in enumerate(mats):
        require_square(m, f"{what} block {k}")
    dims = {m.shape[0] for m in mats}
    if len(dims) > 1:
        raise ShapeError(f"{what} blocks must share one dimension, got shapes {[m.shape for m in mats]}")
    return mats


def two_by_two(a, b, c, d) -> BlockSpec:
    """[[A, B], [C, D]]"""
    return BlockSpec.from_grid([[a, b], [c, d]])


def first_row(blocks: Sequence[object]) -> BlockSpec:
    """[[A_11, ..., A_1n], [0, ..., 0], ...]; A_11 square, shared row dimension"""
    mats = [as_matrix(b, f"first-row block {k}") for k, b in enumerate(blocks)]
    if not mats:
        raise ShapeError("first-row spec needs at least one block")
    require_square(mats[0], "A_11")
    height = mats[0].shape[0]
    for k, m in enumerate(mats):
        if m.shape[0] != height:
            raise ShapeError(f"first-row block {k} has {m.shape[0]} rows, expected {height}")
    n = len(mats)
    col_dims = [m.shape[1] for m in mats]
    # block-square: zero rows below carry the column dimensions
    row_dims = [height] + col_dims[1:]
    grid = [list(mats)] + [[None] * n for _ in range(n - 1)]
    return BlockSpec(n=n, row_dims=row_dims, col_dims=col_dims, blocks=grid)


def off_diagonal(a, b) -> ComplexMatrix:
    """[[0, A], [B, 0]] for square A, B of equal dimension"""
    a_, b_ = _equal_square([a, b], "off-diagonal")
    return assemble(BlockSpec.from_grid([[None, a_], [b_, None]]))


def anti_diagonal(blocks: Sequence[object]) -> ComplexMatrix:
    """A_1 top-right through A_n bottom-left"""
    mats = _equal_square(blocks, "anti-diagonal")
    n = len(mats)
    d = mats[0].shape[0]
    grid = [[mats[i] if j == n - 1 - i else None for j in range(n)] for i in range(n)]
    return assemble(BlockSpec(n=n, row_dims=[d] * n, col_dims=[d] * n, blocks=grid))


def flip_unitary(dims: Sequence[int]) -> ComplexMatrix:
    """Block anti-diagonal of identities: block k of x lands in block n-1-k"""
    dims = list(dims)
    if not dims or any(d < 1 for d in dims):
        raise ShapeError(f"flip_unitary needs positive dimensions, got {dims}")
    n = len(dims)
    row_dims = dims[::-1]
    grid = [[np.eye(row_dims[i], dtype=np.complex128) if j == n - 1 - i else None for j in range(n)] for i in range(n)]
    return assemble(BlockSpec(n=n, row_dims=row_dims, col_dims=dims, blocks=grid))


def pinch(spec: BlockSpec, mode: PinchMode) -> BlockSpec:
    """
    Keep the diagonal (or off-diagonal) blocks and zero the rest.
    Zeroed blocks stay present as explicit zeros so the result is always a valid spec.
    """
    keep_diagonal = PinchMode(mode) is PinchMode.DIAGONAL
    grid = []
    for i in range(spec.n):
        row = []
        for j in range(spec.n):
            if (i == j) == keep_diagonal:
                row.append(spec.block(i, j))
            else:
                row.append(freeze(np.zeros((spec.row_dims[i], spec.col_dims[j]), dtype=np.complex128)))
        grid.append(row)
    return BlockSpec(n=spec.n, row_dims=spec.row_dims, col_dims=spec.col_dims, blocks=grid)


def equality_model(s: float, b=None) -> ComplexMatrix:
    """
    [[0, s], [0, 0]] (+) sB, a matrix with ||M|| = s and w(M) = s/2.
    B may be empty (None or 0x0); w(B) <= 1/2 is checked numerically.
    """
    if not s > 0:
        raise PreconditionError(f"s must be positive, got {s!r}")
    shift = np.array([[0.0, s], [0.0, 0.0]], dtype=np.complex128)
    if b is None or np.size(b) == 0:
        return direct_sum(shift)

    b_ = as_matrix(b, "B")
    require_square(b_, "B")
    w_b = numerical_radius(b_).value
    if w_b > 0.5 + Settings.EQUALITY_MODEL_TOL:
        raise PreconditionError(f"w(B) = {w_b:.12g} exceeds 1/2; the model would not attain w = ||M||/2")
    return direct_sum(shift, s * b_)
