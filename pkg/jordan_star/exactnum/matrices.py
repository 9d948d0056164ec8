"""Object-dtype numpy arrays of exact ring elements, and rational linear algebra via sympy."""
from __future__ import annotations

from typing import Iterable, List, Sequence

import numpy as np
from sympy import Matrix, QQ

from jordan_star.exactnum.scalar import rational


def object_array(values: Iterable, shape=None) -> np.ndarray:
    """Build an object array element by element (never lets numpy unpack ring elements)."""
    values = list(values)
    if shape is None:
        shape = (len(values),)
    out = np.empty(len(values), dtype=object)
    for i, value in enumerate(values):
        out[i] = value
    return out.reshape(shape)


def rational_zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(QQ(0))
    return out


def rational_identity(n: int) -> np.ndarray:
    out = rational_zeros(n, n)
    for i in range(n):
        out[i, i] = QQ(1)
    return out


def rational_array(rows) -> np.ndarray:
    """Nested lists of rational-like entries to a QQ object array."""
    arr = np.array(rows, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = rational(arr[idx])
    return out


def ring_zero(*samples):
    """Zero of the ring the samples live in (Poly zero keeps its varset)."""
    product = 1
    for sample in samples:
        product = product * sample
    return product * 0


def trace(matrix: np.ndarray):
    total = 0
    for i in range(matrix.shape[0]):
        total = total + matrix[i, i]
    return total


def is_zero_array(arr: np.ndarray) -> bool:
    return all(not entry for entry in arr.flat)


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def to_sympy(arr: np.ndarray) -> Matrix:
    rows, cols = arr.shape
    return Matrix(rows, cols, [QQ.to_sympy(rational(x)) for x in arr.flat])


def from_sympy(mat: Matrix) -> np.ndarray:
    out = np.empty((mat.rows, mat.cols), dtype=object)
    for i in range(mat.rows):
        for j in range(mat.cols):
            out[i, j] = QQ.from_sympy(mat[i, j])
    return out


def rational_inverse(arr: np.ndarray) -> np.ndarray:
    """Exact inverse; raises ValueError when singular."""
    mat = to_sympy(arr)
    if mat.det() == 0:
        raise ValueError("matrix is singular")
    return from_sympy(mat.inv())


def rational_rank(arr: np.ndarray) -> int:
    return to_sympy(arr).rank()


def leading_minors(arr: np.ndarray) -> List:
    mat = to_sympy(arr)
    return [QQ.from_sympy(mat[:k, :k].det()) for k in range(1, mat.rows + 1)]


def pivot_columns(columns: Sequence[np.ndarray]) -> List[int]:
    """Indices of a maximal linearly independent prefix-greedy subset of columns."""
    if not columns:
        return []
    mat = to_sympy(np.column_stack(columns))
    _, pivots = mat.rref()
    return list(pivots)


class SpanSolver:
    """Coordinates of vectors in the span of a fixed set of independent rational columns."""

    def __init__(self, columns: Sequence[np.ndarray]):
        self.columns = [np.asarray(c, dtype=object) for c in columns]
        self.basis = np.column_stack(self.columns) if columns else rational_zeros(0, 0)
        # independent rows give an invertible square block
        rows = pivot_columns([row for row in self.basis]) if len(columns) else []
        self.rows = rows
        self.block_inverse = rational_inverse(self.basis[rows, :]) if rows else rational_zeros(0, 0)

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """Coordinates c with basis @ c == vector; raises ValueError outside the span."""
        vector = np.asarray(vector, dtype=object)
        coords = self.block_inverse @ vector[self.rows]
        residual = self.basis @ coords - vector
        if not is_zero_array(residual):
            raise ValueError("vector is not in the span")
        return coords

    def contains(self, vector: np.ndarray) -> bool:
        try:
            self.coordinates(vector)
        except ValueError:
            return False
        return True
