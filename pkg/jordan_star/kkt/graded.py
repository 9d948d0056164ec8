"""The 3-graded Lie algebra g = g_-1 + g_0 + g_1 built from a Jordan algebra.

Elements are triples (u, T, v): u in g_-1 (translations), T in g_0 (a matrix in
the span of the box operators), v in g_1. Basis order is

    [Jordan basis of g_-1] + [independent box operators of g_0] + [Jordan basis of g_1]

Everything downstream (chart, moment maps, star representation) works on
coordinate vectors through the structure-constant table, so a perturbed table
propagates to every suite.
"""
from __future__ import annotations

import copy
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import QQ

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.matrices import (
    SpanSolver,
    arrays_equal,
    object_array,
    pivot_columns,
    rational_identity,
    rational_inverse,
    rational_zeros,
    ring_zero,
)
from jordan_star.exactnum.scalar import format_rational, rational, rational_to_json
from jordan_star.jordan.algebra import JordanAlgebra

logger = logging.getLogger(__name__)

# closure of g_0 under commutators never needs more rounds than dim gl(n)
MAX_CLOSURE_ROUNDS = 8


class GradingClosureFailure(JordanStarError):
    """g_0 is not closed under the operations the bracket needs."""


@dataclass(eq=False)
class LieElement:
    algebra: "GradedLieAlgebra"
    u: np.ndarray
    T: np.ndarray
    v: np.ndarray

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.algebra, self.u + other.u, self.T + other.T, self.v + other.v)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.algebra, self.u - other.u, self.T - other.T, self.v - other.v)

    def __neg__(self) -> "LieElement":
        return LieElement(self.algebra, -self.u, -self.T, -self.v)

    def __mul__(self, factor) -> "LieElement":
        return LieElement(self.algebra, self.u * factor, self.T * factor, self.v * factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            arrays_equal(self.u, other.u)
            and arrays_equal(self.T, other.T)
            and arrays_equal(self.v, other.v)
        )

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return not any(x for arr in (self.u, self.T, self.v) for x in arr.flat)

    def coords(self) -> np.ndarray:
        return self.algebra.coords(self)

    def __repr__(self):
        show = lambda arr: "[" + ", ".join(str(x) for x in arr.flat) + "]"
        return f"LieElement(u={show(self.u)}, T={show(self.T)}, v={show(self.v)})"


class GradedLieAlgebra:
    """KKT algebra of a Jordan algebra with base point o = mu * E."""

    def __init__(self, jordan: JordanAlgebra, mu, g0_basis: List[np.ndarray]):
        self.jordan = jordan
        self.mu = rational(mu)
        self.n = jordan.dim
        self.gram = jordan.gram()
        self.gram_inverse = rational_inverse(self.gram)
        self.g0_basis = g0_basis
        self.d0 = len(g0_basis)
        self.dim = 2 * self.n + self.d0
        self._g0_solver = SpanSolver([b.reshape(-1) for b in g0_basis])
        # filled by install_structure
        self.structure: Optional[np.ndarray] = None
        self._sparse: List[Tuple[int, int, int, object]] = []
        self.ad: List[np.ndarray] = []
        self.killing: Optional[np.ndarray] = None
        self.theta_matrix: Optional[np.ndarray] = None

    # --- sizes and markers ---
    @property
    def g_minus(self) -> range:
        return range(0, self.n)

    @property
    def g_zero(self) -> range:
        return range(self.n, self.n + self.d0)

    @property
    def g_plus(self) -> range:
        return range(self.n + self.d0, self.dim)

    # l := g_-1, h := g_0, l' := g_1
    l_indices = g_minus
    h_indices = g_zero
    lp_indices = g_plus

    def degree(self, i: int) -> int:
        if i < self.n:
            return -1
        if i < self.n + self.d0:
            return 0
        return 1

    def labels(self) -> List[str]:
        names = self.jordan.basis_names
        out = [f"u:{name}" for name in names]
        out += [f"h{k + 1}" for k in range(self.d0)]
        out += [f"v:{name}" for name in names]
        return out

    @cached_property
    def E(self) -> np.ndarray:
        """Grading element (0, Id, 0) in coordinates."""
        return self.coords(self.element(T=rational_identity(self.n)))

    @property
    def o(self) -> np.ndarray:
        return self.E * self.mu

    @property
    def c(self):
        return self.mu

    # --- elements and coordinates ---
    def element(self, u=None, T=None, v=None) -> LieElement:
        n = self.n
        u = object_array(u) if u is not None else rational_zeros(n)
        v = object_array(v) if v is not None else rational_zeros(n)
        T = T if T is not None else rational_zeros(n, n)
        return LieElement(self, u, T, v)

    def basis_element(self, i: int) -> LieElement:
        coords = rational_zeros(self.dim)
        coords[i] = QQ(1)
        return self.from_coords(coords)

    def from_coords(self, coords) -> LieElement:
        coords = object_array(coords)
        n, d0 = self.n, self.d0
        zero = ring_zero(coords[0])
        T = np.empty((n, n), dtype=object)
        T.fill(zero)
        for k in range(d0):
            if coords[n + k]:
                T = T + self.g0_basis[k] * coords[n + k]
        return LieElement(self, coords[:n].copy(), T, coords[n + d0:].copy())

    def g0_coordinates(self, T: np.ndarray) -> np.ndarray:
        try:
            return self._g0_solver.coordinates(T.reshape(-1))
        except ValueError:
            raise GradingClosureFailure("matrix is not in the span of g_0") from None

    def coords(self, X: LieElement) -> np.ndarray:
        parts = list(X.u) + list(self.g0_coordinates(X.T)) + list(X.v)
        return object_array(parts)

    def sharp(self, T: np.ndarray) -> np.ndarray:
        """tau-adjoint: G^-1 T^t G."""
        return self.gram_inverse @ T.T @ self.gram

    # --- structure constants ---
    def install_structure(self, structure: np.ndarray) -> None:
        """Install C[i, j, k] (coefficient of basis k in [X_i, X_j]) and derived data."""
        self.structure = structure
        dim = self.dim
        self._sparse = [
            (i, j, k, structure[i, j, k]) for i, j, k in np.ndindex(structure.shape) if structure[i, j, k]
        ]
        self.ad = []
        for i in range(dim):
            ad_i = rational_zeros(dim, dim)
            for j in range(dim):
                for k in range(dim):
                    ad_i[k, j] = structure[i, j, k]
            self.ad.append(ad_i)
        self.killing = killing_gram(self.ad)
        self.theta_matrix = self._build_theta_matrix()

    def bracket_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Bracket of coordinate vectors over any coefficient ring."""
        zero = ring_zero(x[0], y[0])
        out = [zero] * self.dim
        for i, j, k, s in self._sparse:
            if x[i] and y[j]:
                out[k] = out[k] + s * x[i] * y[j]
        return object_array(out)

    def ad_matrix(self, x: np.ndarray) -> np.ndarray:
        zero = ring_zero(x[0])
        out = np.empty((self.dim, self.dim), dtype=object)
        out.fill(zero)
        for i in range(self.dim):
            if x[i]:
                out = out + self.ad[i] * x[i]
        return out

    def killing_coords(self, x: np.ndarray, y: np.ndarray):
        return x @ self.killing @ y

    def theta_coords(self, x: np.ndarray) -> np.ndarray:
        return self.theta_matrix @ x

    def _build_theta_matrix(self) -> np.ndarray:
        out = rational_zeros(self.dim, self.dim)
        for j in range(self.dim):
            image = self.coords(theta(self.basis_element(j)))
            out[:, j] = image
        return out

    def g0_matrix_of(self, coords: np.ndarray) -> np.ndarray:
        """Matrix sum_k coords[n + k] * B_k of the g_0 part."""
        return self.from_coords(coords).T

    # --- negative controls ---
    def perturbed(self, i: int, j: int, k: int, delta=1) -> "GradedLieAlgebra":
        """Copy with C[i,j,k] += delta and C[j,i,k] -= delta; keep degree(k) = degree(i) + degree(j)."""
        if i == j:
            raise ValueError("perturbation needs i != j")
        if self.degree(k) != self.degree(i) + self.degree(j):
            raise ValueError(f"perturbing C[{i},{j},{k}] would break the grading")
        clone = copy.copy(self)
        structure = self.structure.copy()
        delta = rational(delta)
        structure[i, j, k] = structure[i, j, k] + delta
        structure[j, i, k] = structure[j, i, k] - delta
        clone.install_structure(structure)
        logger.info("perturbed C[%d,%d,%d] by %s", i, j, k, format_rational(delta))
        return clone

    # --- exports ---
    def bracket_table_json(self) -> Dict[str, Dict[str, str]]:
        labels = self.labels()
        table: Dict[str, Dict[str, str]] = {}
        for i, j, k, s in self._sparse:
            if i < j:
                table.setdefault(f"[{labels[i]},{labels[j]}]", {})[labels[k]] = rational_to_json(s)
        return table

    def killing_json(self) -> List[List[str]]:
        return [[rational_to_json(x) for x in row] for row in self.killing]

    def __repr__(self):
        return f"GradedLieAlgebra({self.jordan.name}, mu={format_rational(self.mu)}, dim={self.dim})"


def killing_gram(ad: List[np.ndarray]) -> np.ndarray:
    """K[i, j] = Tr(ad_i ad_j) as one flattened matrix product."""
    dim = len(ad)
    left = np.empty((dim, dim * dim), dtype=object)
    right = np.empty((dim * dim, dim), dtype=object)
    for i, a in enumerate(ad):
        left[i, :] = a.reshape(-1)
        right[:, i] = a.T.reshape(-1)
    return left @ right


# === Construction ===
def _box_span(A: JordanAlgebra) -> List[np.ndarray]:
    n = A.dim
    eye = [A.basis_element(a).coords for a in range(n)]
    boxes = [A.box_matrix(eye[a], eye[b]) for a in range(n) for b in range(n)]
    keep = pivot_columns([m.reshape(-1) for m in boxes])
    return [boxes[k] for k in keep]


def _close_g0(basis: List[np.ndarray]) -> List[np.ndarray]:
    """Extend by commutators until [g_0, g_0] lies in the span."""
    for _ in range(MAX_CLOSURE_ROUNDS):
        solver = SpanSolver([b.reshape(-1) for b in basis])
        extra = []
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                comm = basis[a] @ basis[b] - basis[b] @ basis[a]
                if not solver.contains(comm.reshape(-1)):
                    extra.append(comm)
        if not extra:
            return basis
        logger.warning("g_0 span of box operators is not closed; adding %d commutators", len(extra))
        candidates = basis + extra
        keep = pivot_columns([m.reshape(-1) for m in candidates])
        basis = [candidates[k] for k in keep]
    raise GradingClosureFailure("commutator closure of g_0 did not stabilise")


def bracket(X: LieElement, Y: LieElement) -> LieElement:
    """[X, X'] = (T u' - T' u, 2 u' box v + [T, T'] - 2 u box v', T'# v - T# v')."""
    g = X.algebra
    if Y.algebra is not g:
        raise ValueError("elements of different Lie algebras")
    A = g.jordan
    u, T, v = X.u, X.T, X.v
    u2, T2, v2 = Y.u, Y.T, Y.v
    first = T @ u2 - T2 @ u
    middle = 2 * A.box_matrix(u2, v) + (T @ T2 - T2 @ T) - 2 * A.box_matrix(u, v2)
    last = g.sharp(T2) @ v - g.sharp(T) @ v2
    return LieElement(g, first, middle, last)


def theta(X: LieElement) -> LieElement:
    """(u, T, v) -> (v, -T#, u)."""
    g = X.algebra
    return LieElement(g, X.v.copy(), -g.sharp(X.T), X.u.copy())


def build_kkt(A: JordanAlgebra, mu) -> GradedLieAlgebra:
    """Assemble g from A: g_0 basis, bracket table, Killing Gram matrix, theta."""
    mu = rational(mu)
    if not mu:
        raise ValueError("mu must be nonzero")
    g0 = _close_g0(_box_span(A))
    g = GradedLieAlgebra(A, mu, g0)
    for T in g0:
        if not g._g0_solver.contains(g.sharp(T).reshape(-1)):
            raise GradingClosureFailure("g_0 is not closed under the tau-adjoint")
    dim = g.dim
    structure = rational_zeros(dim, dim, dim)
    basis = [g.basis_element(i) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            image = g.coords(bracket(basis[i], basis[j]))
            for k in range(dim):
                if image[k]:
                    structure[i, j, k] = image[k]
                    structure[j, i, k] = -image[k]
    g.install_structure(structure)
    from jordan_star.kkt.verify import jacobi_failures

    failures = jacobi_failures(g)
    if failures:
        (i, j, k), value = failures[0]
        raise GradingClosureFailure(f"Jacobi identity fails on basis triple ({i}, {j}, {k}): {value}")
    logger.info("built %r (g_0 dimension %d)", g, g.d0)
    return g
