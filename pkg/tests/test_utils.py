import importlib
import logging
import re
from pathlib import Path

from rich.logging import RichHandler

from jordan_star.utils import cache, config
from jordan_star.utils.logsetup import PACKAGE_LOGGER, setup_logging
from jordan_star.utils.report import SuiteReport, VerificationReport


def test_suite_report_tracks_failures():
    report = SuiteReport(suite="lie")
    report.add("jacobi", True)
    report.add("grading", False, (0, 2), residual=3)
    assert not report.passed
    assert [c.name for c in report.failures()] == ["grading"]
    assert report.check("grading").indices == [0, 2]
    assert report.check("grading").residual == "3"
    assert report.check("missing") is None


def test_merge_and_verification_summary():
    a = SuiteReport(suite="theorem")
    a.record("rho_sign", "anti-homomorphism")
    b = SuiteReport(suite="theorem")
    b.add("equivalence", False)
    a.merge(b)
    assert not a.passed
    assert a.constants["rho_sign"] == "anti-homomorphism"

    full = VerificationReport(algebra="rank1", mu="1")
    full.add_suite(SuiteReport(suite="jordan"))
    assert full.passed
    full.add_suite(a)
    assert not full.passed
    assert '"theorem"' in full.model_dump_json()


def test_cache_builds_once():
    cache.clear()
    calls = []

    def build():
        calls.append(1)
        return object()

    first = cache.cached("kkt", "abc", "1", build)
    assert cache.cached("kkt", "abc", "1", build) is first
    assert cache.cached("kkt", "abc", "2", build) is not first
    assert len(calls) == 2
    cache.clear()


def test_logging_setup_is_idempotent():
    logger = setup_logging("debug")
    setup_logging("info")
    assert logger.name == PACKAGE_LOGGER
    assert logger.level == logging.INFO
    assert sum(isinstance(h, RichHandler) for h in logger.handlers) == 1


def test_config_reads_the_environment(monkeypatch):
    monkeypatch.setenv("JORDAN_STAR_ASSOC_TRIALS", "25")
    monkeypatch.setenv("JORDAN_STAR_LOG_LEVEL", "DEBUG")
    try:
        importlib.reload(config)
        assert config.ASSOC_TRIALS == 25
        assert config.LOG_LEVEL == "DEBUG"
    finally:
        monkeypatch.undo()
        importlib.reload(config)


IMPORT_NAMES = {"python-dotenv": "dotenv"}


def test_every_pinned_requirement_is_imported():
    root = Path(__file__).resolve().parent.parent
    pinned = [line.split("==")[0] for line in (root / "requirements.txt").read_text().split() if "==" in line]
    sources = "\n".join(p.read_text() for d in ("jordan_star", "tests") for p in (root / d).rglob("*.py"))
    for name in pinned:
        module = IMPORT_NAMES.get(name, name)
        assert re.search(rf"^\s*(from|import) {module}\b", sources, re.M), name
