"""Runs the verification suites jordan -> lie -> chart -> star -> fourier -> theorem on one algebra."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from jordan_star.chart.darboux import ChartContext, build_chart, verify_strongly_hamiltonian
from jordan_star.errors import JordanStarError
from jordan_star.exactnum.scalar import format_rational, rational
from jordan_star.hds.equivalence import (
    EquivalenceSolution,
    NoEquivalence,
    compare_with_theorem,
    solve_operator_equivalence,
)
from jordan_star.hds.tube import verify_component_formulas, verify_dpi_homomorphism
from jordan_star.jordan.algebra import JordanAlgebra
from jordan_star.jordan.validate import validate_jordan
from jordan_star.kkt.graded import GradedLieAlgebra, build_kkt
from jordan_star.kkt.symplectic import SymplecticChartBasis, symplectic_basis
from jordan_star.kkt.verify import verify_lie_structure
from jordan_star.starrep.holomorphic import HolomorphicField
from jordan_star.starrep.verify import (
    fields_for_basis,
    measure_kappa_h,
    star_side_table,
    verify_prop_2_7,
    verify_rho_homomorphism,
)
from jordan_star.utils.cache import cached
from jordan_star.utils.report import Constants, EquivalenceReport, SuiteReport, VerificationReport
from jordan_star.weyl.verify import run_star_suite

logger = logging.getLogger(__name__)

SUITES: Tuple[str, ...] = ("jordan", "lie", "chart", "star", "fourier", "theorem")


@dataclass
class Artifacts:
    """Construction results shared by the suites of one run."""

    algebra: JordanAlgebra
    mu: object
    perturb: Optional[Tuple[int, int, int]] = None
    g: Optional[GradedLieAlgebra] = None
    basis: Optional[SymplecticChartBasis] = None
    ctx: Optional[ChartContext] = None
    solution: Optional[EquivalenceSolution] = None
    _fields: Optional[List[HolomorphicField]] = field(default=None, repr=False)

    def lie(self) -> GradedLieAlgebra:
        if self.g is None:
            fingerprint = self.algebra.fingerprint()
            g = cached("kkt", fingerprint, self.mu, lambda: build_kkt(self.algebra, self.mu))
            if self.perturb is not None:
                g = g.perturbed(*self.perturb)
            self.g = g
        return self.g

    def symplectic(self) -> SymplecticChartBasis:
        if self.basis is None:
            if self.perturb is None:
                self.basis = cached(
                    "basis", self.algebra.fingerprint(), self.mu, lambda: symplectic_basis(self.lie())
                )
            else:
                self.basis = symplectic_basis(self.lie())
        return self.basis

    def chart(self) -> ChartContext:
        if self.ctx is None:
            if self.perturb is None:
                self.ctx = cached(
                    "chart", self.algebra.fingerprint(), self.mu, lambda: build_chart(self.lie(), self.symplectic())
                )
            else:
                self.ctx = build_chart(self.lie(), self.symplectic())
        return self.ctx

    def fields(self) -> List[HolomorphicField]:
        if self._fields is None:
            self._fields = fields_for_basis(self.chart())
        return self._fields


def _construction_failure(suite: str, exc: Exception) -> SuiteReport:
    report = SuiteReport(suite=suite)
    report.add("construction", False, residual=f"{type(exc).__name__}: {exc}")
    return report


def theorem_suite(art: Artifacts) -> Tuple[SuiteReport, Optional[EquivalenceSolution], Optional[EquivalenceReport]]:
    ctx = art.chart()
    g = ctx.g
    start = time.perf_counter()
    report = SuiteReport(suite="theorem")
    table = [f.operator() for f in art.fields()]
    report.merge(verify_rho_homomorphism(ctx, table))
    report.merge(verify_dpi_homomorphism(g))
    report.merge(verify_component_formulas(g))

    kappa_h = measure_kappa_h(ctx, art.fields())
    report.record("kappa_h", kappa_h)
    solution = star_side = None
    equivalence = None
    try:
        solution = solve_operator_equivalence(g, table)
        report.add("equivalence", True, detail=f"alpha = {solution.alpha}, m* = {solution.m}")
    except NoEquivalence as exc:
        report.add("equivalence", False, residual=exc.residual, detail=str(exc))
    try:
        star_side = solve_operator_equivalence(g, star_side_table(ctx))
        report.add("star_side_equivalence", True, detail=f"alpha = {star_side.alpha}, m = {star_side.m}")
    except (NoEquivalence, ValueError) as exc:
        report.add("star_side_equivalence", False, residual=getattr(exc, "residual", None), detail=str(exc))
    art.solution = solution
    if solution is not None:
        equivalence = compare_with_theorem(g, solution, kappa_h, star_side)
        report.add("m_matches_formula", equivalence.match != "failed", detail=f"{equivalence.match}, factor {equivalence.factor}")
        report.add(
            "factor_traced",
            equivalence.factor_traced,
            residual=None if equivalence.factor_traced else f"factor {equivalence.factor} != traced {equivalence.traced_factor}",
            detail=f"-2 s_alpha kappa_h / kappa_g with kappa_g = {equivalence.kappa_g}",
        )
        report.record("alpha", solution.alpha)
        report.record("m_star", solution.m)
        report.record("m_paper", equivalence.m_paper)
        report.record("match", equivalence.match)
        report.record("factor", equivalence.factor)
        report.record("traced_factor", equivalence.traced_factor)
    report.seconds = time.perf_counter() - start
    logger.info("theorem suite on %r: %s in %.2fs", g, "pass" if report.passed else "FAIL", report.seconds)
    return report, solution, equivalence


def _fill_constants(report: VerificationReport) -> None:
    merged = {}
    for suite in report.suites.values():
        merged.update(suite.constants)
    values = {}
    for name in Constants.model_fields:
        if name in merged and merged[name] != "None":
            values[name] = int(merged[name]) if name in ("dim_g", "property_b_n") else merged[name]
    report.constants = Constants(**values)


def run_pipeline(
    algebra: JordanAlgebra,
    mu,
    suites: Iterable[str] = SUITES,
    perturb: Optional[Tuple[int, int, int]] = None,
    trials: Optional[int] = None,
) -> Tuple[VerificationReport, Artifacts]:
    mu = rational(mu)
    selected = [s for s in SUITES if s in set(suites)]
    art = Artifacts(algebra, mu, perturb)
    report = VerificationReport(algebra=algebra.name, mu=format_rational(mu))
    logger.info("verifying %s at mu = %s: %s", algebra.name, report.mu, ", ".join(selected))

    # ---- Step 1: Jordan axioms ----
    if "jordan" in selected:
        report.add_suite(validate_jordan(algebra))

    # ---- Step 2: KKT algebra ----
    if "lie" in selected:
        try:
            report.add_suite(verify_lie_structure(art.lie(), art.symplectic()))
        except JordanStarError as exc:
            report.add_suite(_construction_failure("lie", exc))

    # ---- Step 3: Darboux chart and moment maps ----
    if "chart" in selected:
        try:
            report.add_suite(verify_strongly_hamiltonian(art.chart()))
        except JordanStarError as exc:
            report.add_suite(_construction_failure("chart", exc))

    # ---- Step 4: Star product ----
    if "star" in selected:
        try:
            report.add_suite(run_star_suite(art.chart(), trials))
        except JordanStarError as exc:
            report.add_suite(_construction_failure("star", exc))

    # ---- Step 5: Fourier transform and holomorphic frame ----
    if "fourier" in selected:
        try:
            report.add_suite(verify_prop_2_7(art.chart(), art.fields()))
        except JordanStarError as exc:
            report.add_suite(_construction_failure("fourier", exc))

    # ---- Step 6: Equivalence with the discrete series ----
    if "theorem" in selected:
        try:
            suite, _, equivalence = theorem_suite(art)
            report.add_suite(suite)
            report.equivalence = equivalence
        except JordanStarError as exc:
            report.add_suite(_construction_failure("theorem", exc))

    _fill_constants(report)
    logger.info("%s: %s", algebra.name, "all selected suites pass" if report.passed else "FAILED")
    return report, art
