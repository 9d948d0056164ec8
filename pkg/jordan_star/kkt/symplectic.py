"""The form Omega(X, Y) = beta(o, [X, Y]) on q = l + l' and a symplectic basis for it."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.matrices import arrays_equal, rational_identity, rational_inverse, rational_zeros
from jordan_star.kkt.graded import GradedLieAlgebra, LieElement

logger = logging.getLogger(__name__)


class NotInQ(JordanStarError):
    """Argument has a nonzero g_0 component."""


class SingularPairing(JordanStarError):
    """Omega does not pair l with l' nondegenerately."""


def omega_coords(g: GradedLieAlgebra, x: np.ndarray, y: np.ndarray):
    return g.killing_coords(g.o, g.bracket_coords(x, y))


def omega_form(X: LieElement, Y: LieElement):
    g = X.algebra
    x, y = g.coords(X), g.coords(Y)
    for vec in (x, y):
        if any(vec[k] for k in g.g_zero):
            raise NotInQ("Omega is only defined on l + l'")
    return omega_coords(g, x, y)


@dataclass(eq=False)
class SymplecticChartBasis:
    g: GradedLieAlgebra
    L: List[np.ndarray]
    Lp: List[np.ndarray]
    pairing: np.ndarray  # M[a, c] = Omega(L_a, theta L_c)

    @property
    def n(self) -> int:
        return len(self.L)

    def gram(self) -> np.ndarray:
        """Omega(L_a, L'_b), the identity once built."""
        out = rational_zeros(self.n, self.n)
        for a in range(self.n):
            for b in range(self.n):
                out[a, b] = omega_coords(self.g, self.L[a], self.Lp[b])
        return out

    def is_symplectic(self) -> bool:
        g = self.g
        n = self.n
        for a in range(n):
            for b in range(n):
                if omega_coords(g, self.L[a], self.L[b]) or omega_coords(g, self.Lp[a], self.Lp[b]):
                    return False
        return arrays_equal(self.gram(), rational_identity(n))

    def point(self, l, lp) -> np.ndarray:
        """sum l^a L_a + sum lp^a L'_a over any coefficient ring."""
        out = self.L[0] * l[0]
        for a in range(1, self.n):
            out = out + self.L[a] * l[a]
        for a in range(self.n):
            out = out + self.Lp[a] * lp[a]
        return out


def symplectic_basis(g: GradedLieAlgebra) -> SymplecticChartBasis:
    """L_a = Jordan basis in g_-1; L'_b = sum_c C[c, b] theta(L_c) with C = M^-1."""
    n = g.n
    L = [g.coords(g.basis_element(i)) for i in g.g_minus]
    theta_L = [g.theta_coords(x) for x in L]
    pairing = rational_zeros(n, n)
    for a in range(n):
        for c in range(n):
            pairing[a, c] = omega_coords(g, L[a], theta_L[c])
    try:
        inverse = rational_inverse(pairing)
    except ValueError:
        raise SingularPairing(f"Omega(L_a, theta L_c) is singular for {g!r}") from None
    Lp = []
    for b in range(n):
        vec = rational_zeros(g.dim)
        for c in range(n):
            if inverse[c, b]:
                vec = vec + theta_L[c] * inverse[c, b]
        Lp.append(vec)
    return SymplecticChartBasis(g, L, Lp, pairing)


def spur(h: np.ndarray, basis: SymplecticChartBasis):
    """sum_a Omega([h, L_a], L'_a): the trace of ad(h) on l."""
    g = basis.g
    total = 0
    for a in range(basis.n):
        total = total + omega_coords(g, g.bracket_coords(h, basis.L[a]), basis.Lp[a])
    return total
