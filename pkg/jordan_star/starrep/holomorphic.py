"""The star representation rho_hat(A) = tau_A + sum_a (l_A)^a d_z^a on polynomials in z.

Everything is computed from the bracket table with a symbolic point z of l:

    h_A(z) = A_h + [A_l', z]
    l_A(z) = A_l + [A_h, z] + 1/2 [z, [z, A_l']]
    tau_A  = 1/(2 nu) (beta(h_A, o) + nu spur(h_A))
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from sympy import QQ

from jordan_star.chart.darboux import ChartContext, as_poly
from jordan_star.exactnum.matrices import object_array
from jordan_star.exactnum.scalar import Scalar
from jordan_star.kkt.graded import GradedLieAlgebra, LieElement
from jordan_star.kkt.symplectic import spur
from jordan_star.mpoly.poly import Poly, VarSet
from jordan_star.weyl.operator import WeylOperator

logger = logging.getLogger(__name__)

HALF_OVER_NU = Scalar.monomial(QQ(1, 2), -1)


@dataclass(eq=False)
class HolomorphicField:
    index: Optional[int]
    h: np.ndarray  # g-coordinates, nonzero only on g_0
    l: List[Poly]
    tau: Poly

    @property
    def varset(self) -> VarSet:
        return self.tau.varset

    def operator(self) -> WeylOperator:
        return WeylOperator.first_order(self.tau, self.l)


def symbolic_point(g: GradedLieAlgebra) -> np.ndarray:
    """z = sum_a z^a L_a as a coordinate vector of polynomials."""
    vs = VarSet.tube(g.n)
    zero = Poly.zero(vs)
    return object_array([Poly.var(vs, vs.names[i]) if i in g.g_minus else zero for i in range(g.dim)])


def _lift(vs: VarSet, coords: np.ndarray) -> np.ndarray:
    return object_array([as_poly(vs, x) for x in coords])


def _parts(g: GradedLieAlgebra, coords: np.ndarray, block: range) -> np.ndarray:
    out = coords * 0
    for i in block:
        out[i] = coords[i]
    return out


def _coords_of(g: GradedLieAlgebra, A) -> np.ndarray:
    return g.coords(A) if isinstance(A, LieElement) else object_array(A)


def h_poly(g: GradedLieAlgebra, A) -> np.ndarray:
    """A_h + [A_l', z] in g-coordinates (g_0 entries only)."""
    z = symbolic_point(g)
    vs = z[0].varset
    a = _coords_of(g, A)
    out = _lift(vs, _parts(g, a, g.g_zero)) + g.bracket_coords(_lift(vs, _parts(g, a, g.g_plus)), z)
    return _lift(vs, out)


def l_poly(g: GradedLieAlgebra, A) -> List[Poly]:
    """A_l + [A_h, z] + 1/2 [z, [z, A_l']] as components along the Jordan basis."""
    z = symbolic_point(g)
    vs = z[0].varset
    a = _coords_of(g, A)
    a_h = _lift(vs, _parts(g, a, g.g_zero))
    a_lp = _lift(vs, _parts(g, a, g.g_plus))
    inner = g.bracket_coords(z, a_lp)
    total = _lift(vs, _parts(g, a, g.g_minus)) + g.bracket_coords(a_h, z)
    total = total + object_array([x * QQ(1, 2) for x in g.bracket_coords(z, inner)])
    return [as_poly(vs, total[i]) for i in g.g_minus]


def tau_scalar(ctx: ChartContext, A, h: Optional[np.ndarray] = None) -> Poly:
    """1/(2 nu) (beta(h_A, o) + nu spur(h_A)), affine in z."""
    g = ctx.g
    h = h_poly(g, A) if h is None else h
    vs = h[0].varset
    beta = as_poly(vs, g.killing_coords(h, g.o))
    sp = as_poly(vs, spur(h, ctx.basis))
    return (beta + sp * Scalar.nu(1)) * HALF_OVER_NU


def holomorphic_field(ctx: ChartContext, A, index: Optional[int] = None) -> HolomorphicField:
    g = ctx.g
    h = h_poly(g, A)
    return HolomorphicField(index, h, l_poly(g, A), tau_scalar(ctx, A, h))


def rho_hat(ctx: ChartContext, A) -> WeylOperator:
    return holomorphic_field(ctx, A).operator()


def rho_hat_table(ctx: ChartContext) -> List[WeylOperator]:
    return [holomorphic_field(ctx, ctx.g.basis_element(i), i).operator() for i in range(ctx.g.dim)]


def perturb_scalar(table: Sequence[WeylOperator], index: int, delta=1) -> List[WeylOperator]:
    """Copy of an operator table with the scalar part of entry ``index`` shifted by delta."""
    out = list(table)
    out[index] = out[index] + WeylOperator.constant(out[index].varset, delta)
    logger.info("perturbed scalar part of operator %d by %s", index, delta)
    return out


def jacobian(field: Sequence[Poly]) -> np.ndarray:
    """M[a, b] = d field^a / d z^b."""
    n = len(field)
    out = np.empty((n, n), dtype=object)
    for a in range(n):
        for b in range(n):
            out[a, b] = field[a].diff(b)
    return out
