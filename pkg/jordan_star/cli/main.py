"""Command line: verify, list-algebras, show."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError, field_validator
from rich.console import Console
from rich.table import Table

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.scalar import format_gaussian, format_rational, rational
from jordan_star.hds.equivalence import m_paper
from jordan_star.hds.tube import dpi_table
from jordan_star.jordan.instances import BUILTINS, DATA_DIR, from_selector
from jordan_star.pipelines.verify_pipeline import SUITES, Artifacts, run_pipeline
from jordan_star.starrep.holomorphic import rho_hat_table
from jordan_star.utils import config as settings
from jordan_star.utils.logsetup import setup_logging
from jordan_star.utils.report import RemarkReport, VerificationReport
from jordan_star.weyl.verify import left_operators

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2
SHOW_TABLES = ("bracket-table", "moment-maps", "rho", "dpi", "killing", "star")


class ConfigurationError(JordanStarError):
    """Unusable command-line or RunConfig input."""


class RunConfig(BaseModel):
    algebra: str = "rank1"
    mu: str = settings.DEFAULT_MU
    suites: List[str] = list(SUITES)
    out: Optional[str] = None
    format: Literal["json", "text"] = "text"
    perturb: Optional[Tuple[int, int, int]] = None
    trials: Optional[int] = None
    remark: bool = True

    @field_validator("algebra")
    @classmethod
    def known_selector(cls, value: str) -> str:
        kind, _, arg = value.partition(":")
        if kind == "rank1" and not arg:
            return value
        if kind == "file" and arg:
            return value
        if kind in ("spin", "sym") and arg.isdigit():
            if kind == "spin" and int(arg) < 2:
                raise ValueError("spin factor needs k >= 2")
            if kind == "sym" and int(arg) < 1:
                raise ValueError("sym needs p >= 1")
            return value
        raise ValueError(f"unknown algebra selector {value!r}")

    @field_validator("mu")
    @classmethod
    def nonzero_mu(cls, value: str) -> str:
        try:
            q = rational(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError(f"mu must be a rational number, got {value!r}") from None
        if not q:
            raise ValueError("mu must be nonzero")
        return format_rational(q)

    @field_validator("suites")
    @classmethod
    def known_suites(cls, value: List[str]) -> List[str]:
        if value == ["all"]:
            return list(SUITES)
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")
        return value

    @field_validator("trials")
    @classmethod
    def enough_trials(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("trials must be positive")
        return value


def remark_substitution(config: RunConfig, art: Artifacts) -> RemarkReport:
    """Substitute nu0 = -beta(o,o)/(n c) into the scalar parts."""
    g = art.lie()
    beta_oo = rational(g.killing_coords(g.o, g.o))
    nu0 = -beta_oo / (g.n * g.c)
    numerator = beta_oo + g.n * nu0 * g.c
    labels = g.labels()
    tau = {labels[i]: str(f.tau.evaluate_nu(nu0)) for i, f in enumerate(art.fields())}
    report = RemarkReport(
        nu0=format_rational(nu0),
        numerator_at_nu0=format_rational(numerator),
        m_paper_at_nu0=format_gaussian(m_paper(g).evaluate(nu0)),
        tau_at_nu0=tau,
        scalar_parts_vanish=all(value == "0" for value in tau.values()),
    )
    if art.solution is not None:
        report.m_star_at_nu0 = format_gaussian(art.solution.m.evaluate(nu0))
    logger.info("%s at nu0 = %s: scalar parts vanish = %s", config.algebra, report.nu0, report.scalar_parts_vanish)
    return report


def run(config: RunConfig) -> VerificationReport:
    algebra = from_selector(config.algebra)
    report, art = run_pipeline(algebra, config.mu, config.suites, config.perturb, config.trials)
    theorem = report.suites.get("theorem")
    if config.remark and theorem is not None and theorem.passed:
        report.remark = remark_substitution(config, art)
    if config.out:
        path = Path(config.out)
        if path.parent == Path("."):
            path = Path(settings.REPORT_DIR) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2))
        logger.info("report written to %s", path)
    return report


# === Rendering ===
def _render_text(report: VerificationReport, console: Console) -> None:
    table = Table(title=f"{report.algebra}  mu = {report.mu}")
    table.add_column("suite")
    table.add_column("result")
    table.add_column("checks", justify="right")
    table.add_column("seconds", justify="right")
    for name, suite in report.suites.items():
        passed = sum(c.passed for c in suite.checks)
        table.add_row(name, "pass" if suite.passed else "FAIL", f"{passed}/{len(suite.checks)}", f"{suite.seconds:.2f}")
    console.print(table)

    for suite in report.suites.values():
        for check in suite.failures():
            console.print(f"[{suite.suite}] {check.name} failed at {check.indices}: {check.residual}")

    constants = Table(title="constants")
    constants.add_column("name")
    constants.add_column("value")
    for name, value in report.constants.model_dump().items():
        if value is not None:
            constants.add_row(name, str(value))
    console.print(constants)
    if report.remark is not None:
        console.print(f"nu0 = {report.remark.nu0}: numerator {report.remark.numerator_at_nu0}, "
                      f"scalar parts vanish: {report.remark.scalar_parts_vanish}")


def _show_payload(algebra: str, mu: str, what: str, m: str) -> Dict:
    art = Artifacts(from_selector(algebra), rational(mu))
    g = art.lie()
    labels = g.labels()
    if what == "bracket-table":
        return g.bracket_table_json()
    if what == "killing":
        return {"labels": labels, "gram": g.killing_json()}
    ctx = art.chart()
    if what == "moment-maps":
        return {label: str(lam) for label, lam in zip(labels, ctx.moment_maps())}
    if what == "rho":
        return {label: str(op) for label, op in zip(labels, rho_hat_table(ctx))}
    if what == "dpi":
        return {label: str(op) for label, op in zip(labels, dpi_table(g, rational(m)))}
    return {label: str(op) for label, op in zip(labels, left_operators(ctx))}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jordan-star", description="Exact checks from Jordan algebra to star representation")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run the verification suites")
    verify.add_argument("--algebra", default="rank1", help="rank1 | spin:k | sym:p | file:path")
    verify.add_argument("--mu", default=settings.DEFAULT_MU)
    verify.add_argument("--suites", default="all", help="comma-separated subset of " + ",".join(SUITES))
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--out", default=None)
    verify.add_argument("--perturb", default=None, help="i,j,k: shift one structure constant (negative control)")
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--no-remark", action="store_true")

    sub.add_parser("list-algebras", help="Built-in algebra selectors")

    show = sub.add_parser("show", help="Print one table as text or JSON")
    show.add_argument("--algebra", default="rank1")
    show.add_argument("--mu", default=settings.DEFAULT_MU)
    show.add_argument("--what", choices=SHOW_TABLES, required=True)
    show.add_argument("--m", default="1", help="m for --what dpi")
    show.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _parse_perturb(raw: Optional[str]) -> Optional[Tuple[int, int, int]]:
    if raw is None:
        return None
    parts = raw.split(",")
    if len(parts) != 3 or not all(p.strip().lstrip("-").isdigit() for p in parts):
        raise ConfigurationError(f"--perturb expects i,j,k, got {raw!r}")
    i, j, k = (int(p) for p in parts)
    return i, j, k


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    setup_logging(args.log_level)
    console = Console()

    if args.command == "list-algebras":
        table = Table(title="algebras")
        table.add_column("selector")
        table.add_column("description")
        for selector, description in BUILTINS.items():
            table.add_row(selector, description)
        for path in sorted(DATA_DIR.glob("*.json")):
            table.add_row(f"file:{path}", "bundled structure constants")
        console.print(table)
        return EXIT_OK

    try:
        if args.command == "show":
            RunConfig(algebra=args.algebra, mu=args.mu)
            payload = _show_payload(args.algebra, args.mu, args.what, args.m)
            if args.format == "json":
                print(json.dumps(payload, indent=2, sort_keys=True))
            else:
                for key, value in payload.items():
                    console.print(f"{key}: {value}")
            return EXIT_OK

        config = RunConfig(
            algebra=args.algebra,
            mu=args.mu,
            suites=[s.strip() for s in args.suites.split(",") if s.strip()],
            out=args.out,
            format=args.format,
            perturb=_parse_perturb(args.perturb),
            trials=args.trials,
            remark=not args.no_remark,
        )
        report = run(config)
    except ValidationError as exc:
        for error in exc.errors():
            console.print(f"configuration error: {error['msg']}")
        return EXIT_CONFIG
    except (ConfigurationError, ValueError, OSError) as exc:
        console.print(f"configuration error: {exc}")
        return EXIT_CONFIG
    except JordanStarError as exc:
        console.print(f"construction failed: {exc}")
        return EXIT_CONFIG

    if config.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        _render_text(report, console)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
