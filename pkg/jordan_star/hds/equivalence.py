"""Matching a representation on polynomials in z with dpi_m, up to an automorphism from {+-id, +-theta}."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from sympy import QQ

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.matrices import rational_identity
from jordan_star.exactnum.scalar import NotDivisible, Scalar, format_rational, rational
from jordan_star.hds.tube import TubeField, rank_ratio, tube_field
from jordan_star.kkt.graded import GradedLieAlgebra
from jordan_star.kkt.killing import compare_killing_forms
from jordan_star.mpoly.poly import Poly
from jordan_star.utils.report import EquivalenceReport
from jordan_star.weyl.operator import WeylOperator

logger = logging.getLogger(__name__)

ALPHA_CANDIDATES = ("+id", "-id", "+theta", "-theta")


class NoEquivalence(JordanStarError):
    """No candidate automorphism gives a single m."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


@dataclass
class EquivalenceSolution:
    alpha: str
    m: Scalar
    residual: Optional[str] = None


def alpha_matrix(g: GradedLieAlgebra, tag: str) -> np.ndarray:
    base = rational_identity(g.dim) if tag.endswith("id") else g.theta_matrix
    return base * (-1 if tag.startswith("-") else 1)


def alpha_sign(tag: str) -> int:
    return -1 if tag.startswith("-") else 1


def _solve_scalar(scalar: Poly, trace_dx: Poly, ratio) -> Optional[Scalar]:
    """m with scalar = -m ratio trace_dx, or None."""
    if not trace_dx:
        return None
    exps, c = next(iter(trace_dx.items()))
    m = scalar.coefficient(exps) / (c * (-ratio))
    return m if scalar == trace_dx * (m * (-ratio)) else None


def _try_alpha(
    g: GradedLieAlgebra, table: Sequence[WeylOperator], fields: Sequence[TubeField], tag: str
) -> tuple[Optional[Scalar], int, Optional[str]]:
    """(m, failing basis elements, first residual) for one candidate automorphism."""
    M = alpha_matrix(g, tag)
    ratio = rank_ratio(g)
    image_fields = [tube_field(g, M[:, i]) for i in range(g.dim)]
    failures = 0
    residual = None
    m_star: Optional[Scalar] = None
    for i, op in enumerate(table):
        X = image_fields[i]
        expected_field = [-f for f in X.field]
        if op.vector_part() != expected_field or op.order() > 1:
            failures += 1
            residual = residual or f"vector field of basis {i} differs"
            continue
        scalar = op.scalar_part()
        if not X.trace_dx:
            if scalar:
                failures += 1
                residual = residual or f"basis {i}: scalar part {scalar} with Tr DX = 0"
            continue
        try:
            m = _solve_scalar(scalar, X.trace_dx, ratio)
        except NotDivisible:
            m = None
        if m is None:
            failures += 1
            residual = residual or f"basis {i}: scalar part {scalar} is not a multiple of Tr DX"
        elif m_star is None:
            m_star = m
        elif m != m_star:
            failures += 1
            residual = residual or f"basis {i}: m = {m} but earlier m = {m_star}"
    return (m_star if failures == 0 else None), failures, residual


def solve_operator_equivalence(g: GradedLieAlgebra, table: Sequence[WeylOperator]) -> EquivalenceSolution:
    """First alpha with table[A] = dpi_m(alpha(A)) for every basis A and a single m."""
    fields = [tube_field(g, g.basis_element(i)) for i in range(g.dim)]
    best = None
    for tag in ALPHA_CANDIDATES:
        m, failures, residual = _try_alpha(g, table, fields, tag)
        logger.debug("alpha %s: %d failing basis elements", tag, failures)
        if m is not None:
            return EquivalenceSolution(tag, m)
        if best is None or failures < best[0]:
            best = (failures, tag, residual)
    raise NoEquivalence(f"no candidate in {ALPHA_CANDIDATES} matches (best {best[1]})", best[2])


def solve_equivalence(ctx, table: Optional[Sequence[WeylOperator]] = None) -> EquivalenceSolution:
    """rho_hat(A) = dpi_m*(alpha(A)) for the basis of ctx.g."""
    if table is None:
        from jordan_star.starrep.holomorphic import rho_hat_table

        table = rho_hat_table(ctx)
    solution = solve_operator_equivalence(ctx.g, table)
    logger.info("equivalence on %r: alpha = %s, m* = %s", ctx.g, solution.alpha, solution.m)
    return solution


def m_paper(g: GradedLieAlgebra) -> Scalar:
    """(beta(o,o) + n nu c) / (4 nu r c)."""
    n, r, c = g.n, g.jordan.rank, g.c
    beta_oo = rational(g.killing_coords(g.o, g.o))
    return (Scalar.constant(beta_oo) + Scalar.nu(1) * (n * c)) * Scalar.monomial(QQ(1) / (4 * r * c), -1)


def traced_factor(alpha: str, kappa_h, kappa_g) -> Optional[Scalar]:
    """-2 s_alpha kappa_h / kappa_g; None when either constant is unmeasured."""
    if kappa_h is None or not kappa_g:
        return None
    return Scalar.constant(-2 * alpha_sign(alpha)) * kappa_h / kappa_g


def compare_with_theorem(
    g: GradedLieAlgebra,
    solution: EquivalenceSolution,
    kappa_h: Optional[Scalar] = None,
    star_side: Optional[EquivalenceSolution] = None,
    kappa_g=None,
) -> EquivalenceReport:
    """Compare m* with the closed formula; a proportional factor must equal the traced one."""
    expected = m_paper(g)
    if kappa_g is None:
        _, kappa_g = compare_killing_forms(g)
    report = EquivalenceReport(
        algebra=g.jordan.name,
        mu=format_rational(g.mu),
        alpha=solution.alpha,
        m_star=str(solution.m),
        m_paper=str(expected),
        kappa_g=format_rational(kappa_g) if kappa_g else None,
    )
    factor: Optional[Scalar] = None
    if solution.m == expected:
        report.match = "exact"
        factor = Scalar.one()
    else:
        try:
            factor = solution.m / expected
        except NotDivisible:
            factor = None
        if factor is not None and factor.is_constant:
            report.match = "proportional"
        else:
            factor = None
            report.match = "failed"
    if factor is not None:
        report.factor = str(factor)
    traced = traced_factor(solution.alpha, kappa_h, kappa_g)
    if traced is not None:
        report.traced_factor = str(traced)
        report.factor_traced = factor is not None and factor == traced
    if star_side is not None:
        report.star_side_alpha = star_side.alpha
        report.star_side_m = str(star_side.m)
    logger.info("m* = %s, m_paper = %s: %s", report.m_star, report.m_paper, report.match)
    if report.match == "proportional" and not report.factor_traced:
        logger.warning("factor %s differs from traced factor %s", report.factor, report.traced_factor)
    return report
