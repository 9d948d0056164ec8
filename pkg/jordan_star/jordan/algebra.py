"""Jordan algebras given by rational structure constants, and their standard operators."""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.matrices import object_array, rational_array, ring_zero, trace
from jordan_star.exactnum.scalar import rational_to_json
from jordan_star.mpoly.poly import Poly, VarSet

logger = logging.getLogger(__name__)


class InvalidDimension(JordanStarError):
    """Requested instance size is out of range."""


class ValidationFailed(JordanStarError):
    """A Jordan algebra axiom does not hold."""

    def __init__(self, check: str, message: str = ""):
        self.check = check
        super().__init__(f"{check}: {message}" if message else check)


@dataclass(eq=False)
class JordanAlgebra:
    name: str
    dim: int
    rank: int
    basis_names: Tuple[str, ...]
    structure: np.ndarray  # S[a, b, c]: coefficient of e_c in e_a o e_b
    unit: np.ndarray
    lie_dimension: Optional[int] = None
    _sparse: List[Tuple[int, int, int, object]] = field(init=False, repr=False)

    def __post_init__(self):
        self.structure = rational_array(self.structure)
        self.unit = rational_array(self.unit)
        if self.structure.shape != (self.dim,) * 3 or self.unit.shape != (self.dim,):
            raise ValueError(f"{self.name}: structure/unit shapes do not match dim {self.dim}")
        if len(self.basis_names) != self.dim:
            raise ValueError(f"{self.name}: {len(self.basis_names)} basis names for dim {self.dim}")
        self._sparse = [
            (a, b, c, self.structure[a, b, c])
            for a, b, c in np.ndindex(self.structure.shape)
            if self.structure[a, b, c]
        ]

    # --- elements ---
    def element(self, coords: Sequence) -> "JordanElement":
        return JordanElement(self, object_array(coords))

    def basis_element(self, a: int) -> "JordanElement":
        return self.element([QQ(1) if i == a else QQ(0) for i in range(self.dim)])

    def unit_element(self) -> "JordanElement":
        return JordanElement(self, self.unit.copy())

    def symbolic_element(self, varset: VarSet, names: Sequence[str]) -> "JordanElement":
        return self.element([Poly.var(varset, name) for name in names])

    # --- coordinate-level operators (ring-generic) ---
    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        zero = ring_zero(x[0], y[0])
        out = [zero] * self.dim
        for a, b, c, s in self._sparse:
            if x[a] and y[b]:
                out[c] = out[c] + s * x[a] * y[b]
        return object_array(out)

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        zero = ring_zero(x[0])
        out = np.empty((self.dim, self.dim), dtype=object)
        out.fill(zero)
        for a, b, c, s in self._sparse:
            if x[a]:
                out[c, b] = out[c, b] + s * x[a]
        return out

    def box_matrix(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        lx, ly = self.left_matrix(x), self.left_matrix(y)
        return self.left_matrix(self.product(x, y)) + lx @ ly - ly @ lx

    def triple(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        return (
            self.product(self.product(x, y), z)
            + self.product(x, self.product(y, z))
            - self.product(y, self.product(x, z))
        )

    def quadratic_matrix(self, z: np.ndarray) -> np.ndarray:
        lz = self.left_matrix(z)
        return 2 * (lz @ lz) - self.left_matrix(self.product(z, z))

    def tau(self, x: np.ndarray, y: np.ndarray):
        return trace(self.left_matrix(self.product(x, y)))

    def trace_of(self, x: np.ndarray):
        return QQ(self.rank, self.dim) * trace(self.left_matrix(x))

    def gram(self) -> np.ndarray:
        """Gram matrix of the trace form tau in the declared basis."""
        eye = [self.basis_element(a).coords for a in range(self.dim)]
        out = np.empty((self.dim, self.dim), dtype=object)
        for a in range(self.dim):
            for b in range(self.dim):
                out[a, b] = self.tau(eye[a], eye[b])
        return out

    # --- serialization ---
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "rank": self.rank,
            "basis": list(self.basis_names),
            "unit": [rational_to_json(q) for q in self.unit],
            "structure": [
                [[rational_to_json(self.structure[a, b, c]) for c in range(self.dim)] for b in range(self.dim)]
                for a in range(self.dim)
            ],
            "lie_dimension": self.lie_dimension,
        }

    def fingerprint(self) -> str:
        payload = self.to_json()
        payload.pop("name")
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


@dataclass(eq=False)
class JordanElement:
    algebra: JordanAlgebra
    coords: np.ndarray

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError(f"expected {self.algebra.dim} coordinates, got {len(self.coords)}")

    def _same(self, other: "JordanElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        return JordanElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        self._same(other)
        return JordanElement(self.algebra, self.coords - other.coords)

    def __neg__(self):
        return JordanElement(self.algebra, -self.coords)

    def __mul__(self, other):
        if isinstance(other, JordanElement):
            self._same(other)
            return JordanElement(self.algebra, self.algebra.product(self.coords, other.coords))
        return JordanElement(self.algebra, self.coords * other)

    def __rmul__(self, other):
        return JordanElement(self.algebra, other * self.coords)

    def __eq__(self, other):
        if not isinstance(other, JordanElement) or other.algebra is not self.algebra:
            return NotImplemented
        return all(x == y for x, y in zip(self.coords, other.coords))

    __hash__ = None

    def __repr__(self):
        return f"JordanElement({self.algebra.name}: [{', '.join(str(c) for c in self.coords)}])"


# === Operators ===
def L_operator(x: JordanElement) -> np.ndarray:
    return x.algebra.left_matrix(x.coords)


def tau_form(x: JordanElement, y: JordanElement):
    x._same(y)
    return x.algebra.tau(x.coords, y.coords)


def jordan_trace(x: JordanElement):
    return x.algebra.trace_of(x.coords)


def box_operator(x: JordanElement, y: JordanElement) -> np.ndarray:
    x._same(y)
    return x.algebra.box_matrix(x.coords, y.coords)


def triple_product(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    x._same(y)
    x._same(z)
    return JordanElement(x.algebra, x.algebra.triple(x.coords, y.coords, z.coords))


def quadratic_rep(z: JordanElement) -> np.ndarray:
    return z.algebra.quadratic_matrix(z.coords)


def apply_matrix(matrix: np.ndarray, x: JordanElement) -> JordanElement:
    return JordanElement(x.algebra, matrix @ x.coords)
