"""Darboux chart phi(l, l') = Ad(exp l exp l') o, moment maps and the Poisson bracket."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from sympy import QQ

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.matrices import object_array
from jordan_star.kkt.graded import GradedLieAlgebra, LieElement
from jordan_star.kkt.symplectic import SymplecticChartBasis
from jordan_star.mpoly.poly import Poly, VarSet, VarSetMismatch
from jordan_star.utils.report import SuiteReport

logger = logging.getLogger(__name__)

# ad(l)^3 = 0 on a 3-graded algebra
MAX_EXP_TERMS = 6


class SeriesNotTerminating(JordanStarError):
    """exp(ad X) Y needs more than MAX_EXP_TERMS terms, so X is not ad-nilpotent."""


def as_poly(varset: VarSet, value) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(varset, value)


@dataclass(eq=False)
class ChartContext:
    g: GradedLieAlgebra
    basis: SymplecticChartBasis
    varset: VarSet
    phi: np.ndarray
    _moment_maps: Optional[List[Poly]] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def l_names(self) -> List[str]:
        return list(self.varset.names[: self.n])

    @property
    def lp_names(self) -> List[str]:
        return list(self.varset.names[self.n:])

    def moment_maps(self) -> List[Poly]:
        if self._moment_maps is None:
            self._moment_maps = [moment_map(self, self.g.basis_element(i)) for i in range(self.g.dim)]
        return self._moment_maps

    def moment_of_coords(self, coords: np.ndarray) -> Poly:
        """lambda of a linear combination of basis elements."""
        maps = self.moment_maps()
        total = Poly.zero(self.varset)
        for k, c in enumerate(coords):
            if c:
                total = total + maps[k] * c
        return total

    def moment_table_json(self) -> Dict[str, list]:
        labels = self.g.labels()
        return {labels[i]: lam.to_json() for i, lam in enumerate(self.moment_maps())}


def _exp_ad(g: GradedLieAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """exp(ad X) Y as a terminating series."""
    total = Y
    term = Y
    for k in range(1, MAX_EXP_TERMS + 1):
        term = g.bracket_coords(X, term)
        if not any(term):
            return total
        term = object_array([t * QQ(1, k) for t in term])
        total = total + term
    raise SeriesNotTerminating(f"exp(ad X) series did not terminate after {MAX_EXP_TERMS} terms")


def build_chart(g: GradedLieAlgebra, basis: SymplecticChartBasis) -> ChartContext:
    """phi = exp(ad l) exp(ad l') o in Darboux coordinates w.r.t. {L_a, L'_a}."""
    n = g.n
    vs = VarSet.phase_space(n)
    variables = Poly.variables(vs)
    l_vec = object_array([Poly.zero(vs)] * g.dim)
    lp_vec = l_vec
    for a in range(n):
        l_vec = l_vec + basis.L[a] * variables[a]
        lp_vec = lp_vec + basis.Lp[a] * variables[n + a]
    o = object_array([Poly.constant(vs, x) for x in g.o])
    phi = _exp_ad(g, l_vec, _exp_ad(g, lp_vec, o))
    phi = object_array([as_poly(vs, x) for x in phi])
    ctx = ChartContext(g, basis, vs, phi)
    logger.debug("chart built for %r", g)
    return ctx


def moment_map(ctx: ChartContext, A) -> Poly:
    """lambda_A = beta(phi, A)."""
    coords = ctx.g.coords(A) if isinstance(A, LieElement) else A
    value = ctx.phi @ ctx.g.killing @ coords
    return as_poly(ctx.varset, value)


def poisson(p: Poly, q: Poly) -> Poly:
    """sum_a dp/dl^a dq/dl'^a - dp/dl'^a dq/dl^a."""
    if p.varset != q.varset:
        raise VarSetMismatch(f"{p.varset} vs {q.varset}")
    n = p.varset.half
    total = Poly.zero(p.varset)
    for a in range(n):
        total = total + p.diff(a) * q.diff(n + a) - p.diff(n + a) * q.diff(a)
    return total


def verify_strongly_hamiltonian(ctx: ChartContext) -> SuiteReport:
    """lambda_[A,B] = {lambda_A, lambda_B} on every basis pair, plus degree bounds."""
    start = time.perf_counter()
    report = SuiteReport(suite="chart")
    g = ctx.g
    n = g.n
    lam = ctx.moment_maps()
    l_idx, lp_idx = list(range(n)), list(range(n, 2 * n))

    at_origin = [p.constant_term() for p in ctx.phi]
    report.add("base_point", all(a == b for a, b in zip(at_origin, g.o)), detail="phi(0,0) = o")

    bad_phi = next(
        (k for k, p in enumerate(ctx.phi) if p.degree_in(l_idx) > 2 or p.degree_in(lp_idx) > 1),
        None,
    )
    report.add("chart_degree_bounds", bad_phi is None, [bad_phi] if bad_phi is not None else None)

    bad = next(
        (i for i, p in enumerate(lam) if p.degree() > 3 or p.degree_in(l_idx) > 2 or p.degree_in(lp_idx) > 1),
        None,
    )
    report.add(
        "moment_degree_bounds",
        bad is None,
        [bad] if bad is not None else None,
        None if bad is None else lam[bad],
        detail="deg <= 3, deg_l <= 2, deg_l' <= 1",
    )

    lam_o = ctx.moment_of_coords(g.o).constant_term()
    beta_oo = g.killing_coords(g.o, g.o)
    report.add("moment_at_base_point", lam_o == beta_oo, detail="lambda_o(0,0) = beta(o,o)")

    failed = 0
    first = None
    pairs = 0
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            pairs += 1
            residual = poisson(lam[i], lam[j]) - ctx.moment_of_coords(g.structure[i, j, :])
            if residual:
                failed += 1
                if first is None:
                    first = ((i, j), residual)
    report.add(
        "poisson_homomorphism",
        failed == 0,
        first[0] if first else None,
        first[1] if first else None,
        detail=f"{pairs - failed}/{pairs} pairs",
    )
    report.seconds = time.perf_counter() - start
    logger.info("chart suite on %r: %s in %.2fs", g, "pass" if report.passed else "FAIL", report.seconds)
    return report
