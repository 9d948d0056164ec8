"""Killing forms: Tr(ad X ad Y) from the table, and the closed formula on triples."""
from __future__ import annotations

import logging
from typing import Optional, Tuple

from jordan_star.exactnum.matrices import trace
from jordan_star.kkt.graded import GradedLieAlgebra, LieElement

logger = logging.getLogger(__name__)

BETA_O_NORMALIZATIONS = ("gl", "g0")


def killing_intrinsic(X: LieElement, Y: LieElement):
    g = X.algebra
    return g.killing_coords(g.coords(X), g.coords(Y))


def _g0_killing(g: GradedLieAlgebra, T, T2):
    """Killing form of g_0 itself, from the g_0 block of the table."""
    x = g.g0_coordinates(T)
    y = g.g0_coordinates(T2)
    total = 0
    for a, i in enumerate(g.g_zero):
        for b, j in enumerate(g.g_zero):
            if not (x[a] and y[b]):
                continue
            block = 0
            for k in g.g_zero:
                for m in g.g_zero:
                    block = block + g.structure[i, m, k] * g.structure[j, k, m]
            total = total + x[a] * y[b] * block
    return total


def beta_o(g: GradedLieAlgebra, T, T2, normalization: str = "gl"):
    if normalization == "gl":
        n = g.n
        return 2 * n * trace(T @ T2) - 2 * trace(T) * trace(T2)
    if normalization == "g0":
        return _g0_killing(g, T, T2)
    raise ValueError(f"unknown beta_o normalization {normalization!r}")


def killing_closed_form(X: LieElement, Y: LieElement, beta_o_normalization: str = "gl"):
    """beta_o(T,T') + 2 tr(TT') - 4 tau(u,v') - 4 tau(v,u')."""
    g = X.algebra
    A = g.jordan
    T, T2 = X.T, Y.T
    return (
        beta_o(g, T, T2, beta_o_normalization)
        + 2 * trace(T @ T2)
        - 4 * A.tau(X.u, Y.v)
        - 4 * A.tau(X.v, Y.u)
    )


def kappa_for(g: GradedLieAlgebra, normalization: str):
    """Ratio closed/intrinsic if it is one constant over all basis pairs, else None."""
    basis = [g.basis_element(i) for i in range(g.dim)]
    kappa = None
    for i in range(g.dim):
        for j in range(i, g.dim):
            closed = killing_closed_form(basis[i], basis[j], normalization)
            intrinsic = g.killing[i, j]
            if not intrinsic:
                if closed:
                    return None
                continue
            ratio = closed / intrinsic
            if kappa is None:
                kappa = ratio
            elif ratio != kappa:
                return None
    return kappa


def compare_killing_forms(g: GradedLieAlgebra) -> Tuple[Optional[str], Optional[object]]:
    """First normalization of beta_o whose closed form is proportional to the intrinsic one."""
    for normalization in BETA_O_NORMALIZATIONS:
        kappa = kappa_for(g, normalization)
        if kappa:
            logger.debug("closed Killing form with beta_o=%s: kappa_g = %s", normalization, kappa)
            return normalization, kappa
    return None, None
