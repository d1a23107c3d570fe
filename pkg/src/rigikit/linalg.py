"""Rank and kernel computations for exact rational and floating matrices.

Exact rank runs fraction-free Bareiss elimination on denominator-cleared
rows, pivoting on the entry of largest absolute value to limit coefficient
growth.  Exact kernels come from a rational Gauss-Jordan pass.  Floating
matrices use SVD with a relative singular-value cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "ExactMatrix":
        frozen = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if frozen:
            width = len(frozen[0])
            if any(len(row) != width for row in frozen):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        return ExactMatrix(frozen, cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "ExactMatrix":
        data = tuple(
            tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)
        )
        return ExactMatrix(data, self.rows)

    def to_float(self) -> "FloatMatrix":
        return FloatMatrix([[float(x) for x in row] for row in self.entries], self.cols)


class FloatMatrix:
    def __init__(self, data, cols: int | None = None):
        arr = np.asarray(data, dtype=float)
        if arr.size == 0:
            if cols is None:
                cols = arr.shape[1] if arr.ndim == 2 else 0
            arr = arr.reshape(0, cols)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.data = arr
        self.data.setflags(write=False)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def transpose(self) -> "FloatMatrix":
        return FloatMatrix(self.data.T.copy(), self.rows)

    def __repr__(self):
        return f"FloatMatrix({self.data!r})"


Matrix = ExactMatrix | FloatMatrix


def _integerized_rows(matrix: ExactMatrix) -> list[list[int]]:
    out = []
    for row in matrix.entries:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss_rank(rows: list[list[int]]) -> int:
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    prev = 1
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        pivot_row, pivot_abs = -1, 0
        for i in range(r, nr):
            v = abs(m[i][c])
            if v > pivot_abs:
                pivot_row, pivot_abs = i, v
        if pivot_row < 0:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        for i in range(r + 1, nr):
            row_i, row_r = m[i], m[r]
            factor = row_i[c]
            for j in range(c + 1, nc):
                row_i[j] = (p * row_i[j] - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def _exact_rank(matrix: ExactMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return _bareiss_rank(_integerized_rows(matrix))


def _float_rank(matrix: FloatMatrix, tol: float) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    sigma = np.linalg.svd(matrix.data, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.sum(sigma > tol * sigma[0]))


def rank(matrix: Matrix, tol: float | None = None) -> int:
    """Matrix rank.  ``tol`` is required for floating matrices (relative cutoff)."""
    if isinstance(matrix, ExactMatrix):
        return _exact_rank(matrix)
    if tol is None:
        raise ValueError("floating-point rank needs a tolerance")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return _float_rank(matrix, tol)


def _exact_kernel(matrix: ExactMatrix) -> list[tuple[Fraction, ...]]:
    nc = matrix.cols
    m = [list(row) for row in matrix.entries]
    nr = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        pivot_row = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * nc
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][fc]
        basis.append(normalize_exact_vector(tuple(vec)))
    return basis


def _float_kernel(matrix: FloatMatrix, tol: float) -> list[tuple[float, ...]]:
    nc = matrix.cols
    if nc == 0:
        return []
    if matrix.rows == 0:
        return [tuple(row) for row in np.eye(nc)]
    _, sigma, vh = np.linalg.svd(matrix.data, full_matrices=True)
    top = sigma[0] if sigma.size else 0.0
    rk = int(np.sum(sigma > tol * top)) if top > 0 else 0
    return [tuple(float(x) for x in vh[i]) for i in range(rk, nc)]


def kernel(matrix: Matrix, tol: float | None = None):
    """Basis of the right null space; length is cols - rank."""
    if isinstance(matrix, ExactMatrix):
        return _exact_kernel(matrix)
    if tol is None:
        raise ValueError("floating-point kernel needs a tolerance")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return _float_kernel(matrix, tol)


def cokernel(matrix: Matrix, tol: float | None = None):
    """Basis of the left null space (kernel of the transpose)."""
    return kernel(matrix.transpose(), tol)


def normalize_exact_vector(vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Scale so the first nonzero coordinate equals one."""
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        return vec
    return tuple(x / lead for x in vec)


def normalize_float_vector(vec) -> tuple[float, ...]:
    """Scale to unit Euclidean norm (zero vectors pass through)."""
    arr = np.asarray(vec, dtype=float)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        return tuple(float(x) for x in arr)
    return tuple(float(x) for x in arr / norm)


def exact_determinant(matrix: ExactMatrix) -> Fraction:
    if matrix.rows != matrix.cols:
        raise ValueError("determinant needs a square matrix")
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix.entries]
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                factor = m[i][c] / p
                m[i] = [a - factor * b for a, b in zip(m[i], m[c])]
    return det


def stack_rows(vectors, cols: int, exact: bool) -> Matrix:
    """Build a matrix whose rows are the given flat vectors."""
    if exact:
        return ExactMatrix.from_rows(vectors, cols)
    return FloatMatrix([list(map(float, v)) for v in vectors] if vectors else [], cols)
