"""Structured verification records shared by every suite."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    name: str
    passed: bool
    indices: Optional[List[int]] = None
    residual: Optional[str] = None
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    suite: str
    passed: bool = True
    checks: List[CheckResult] = Field(default_factory=list)
    constants: Dict[str, str] = Field(default_factory=dict)
    seconds: float = 0.0

    def add(self, name: str, passed: bool, indices=None, residual=None, detail=None) -> CheckResult:
        check = CheckResult(
            name=name,
            passed=bool(passed),
            indices=list(indices) if indices is not None else None,
            residual=None if residual is None else str(residual),
            detail=detail,
        )
        self.checks.append(check)
        if not check.passed:
            self.passed = False
            logger.warning("[%s] %s failed at %s: %s", self.suite, name, check.indices, check.residual)
        return check

    def record(self, name: str, value) -> None:
        self.constants[name] = str(value)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def merge(self, other: "SuiteReport") -> None:
        for c in other.checks:
            self.add(c.name, c.passed, c.indices, c.residual, c.detail)
        self.constants.update(other.constants)


class Constants(BaseModel):
    dim_g: Optional[int] = None
    c: Optional[str] = None
    beta_oo: Optional[str] = None
    kappa_g: Optional[str] = None
    beta_o_normalization: Optional[str] = None
    grading_sign: Optional[str] = None
    kappa_h: Optional[str] = None
    property_b_n: Optional[int] = None
    rho_sign: Optional[str] = None
    dpi_sign: Optional[str] = None
    prop_2_7_relation: Optional[str] = None
    alpha: Optional[str] = None
    m_star: Optional[str] = None
    m_paper: Optional[str] = None
    match: Optional[str] = None
    factor: Optional[str] = None
    traced_factor: Optional[str] = None


class EquivalenceReport(BaseModel):
    algebra: str
    mu: str
    alpha: Optional[str] = None
    m_star: Optional[str] = None
    m_paper: Optional[str] = None
    match: str = "failed"
    factor: Optional[str] = None
    traced_factor: Optional[str] = None
    factor_traced: bool = False
    kappa_g: Optional[str] = None
    star_side_alpha: Optional[str] = None
    star_side_m: Optional[str] = None


class RemarkReport(BaseModel):
    nu0: str
    numerator_at_nu0: str
    m_star_at_nu0: Optional[str] = None
    m_paper_at_nu0: str
    tau_at_nu0: Dict[str, str] = Field(default_factory=dict)
    scalar_parts_vanish: bool = False


class VerificationReport(BaseModel):
    algebra: str
    mu: str
    suites: Dict[str, SuiteReport] = Field(default_factory=dict)
    constants: Constants = Field(default_factory=Constants)
    equivalence: Optional[EquivalenceReport] = None
    remark: Optional[RemarkReport] = None
    passed: bool = True

    def add_suite(self, report: SuiteReport) -> None:
        self.suites[report.suite] = report
        self.passed = self.passed and report.passed
