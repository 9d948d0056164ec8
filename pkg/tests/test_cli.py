import json

import pytest
from pydantic import ValidationError

from jordan_star.cli.main import RunConfig, main, run
from jordan_star.jordan.instances import make_rank_one
from jordan_star.pipelines.verify_pipeline import SUITES, run_pipeline
from jordan_star.utils import cache


@pytest.fixture(autouse=True)
def fresh_cache():
    cache.clear()
    yield
    cache.clear()


def test_config_defaults_and_validation():
    config = RunConfig()
    assert config.suites == list(SUITES)
    assert RunConfig(suites=["all"]).suites == list(SUITES)
    assert RunConfig(mu="2/4").mu == "1/2"
    with pytest.raises(ValidationError, match="mu must be nonzero"):
        RunConfig(mu="0")
    with pytest.raises(ValidationError):
        RunConfig(algebra="spin:1")
    with pytest.raises(ValidationError):
        RunConfig(algebra="sym:0")
    with pytest.raises(ValidationError):
        RunConfig(suites=["jordan", "bogus"])


def test_pipeline_on_rank_one():
    report, art = run_pipeline(make_rank_one(), 1, trials=3)
    assert report.passed, {name: s.failures() for name, s in report.suites.items()}
    assert list(report.suites) == list(SUITES)
    constants = report.constants
    assert constants.dim_g == 3
    assert constants.rho_sign == "anti-homomorphism"
    assert constants.dpi_sign == "homomorphism"
    assert constants.alpha == "-id"
    assert constants.match == "proportional"
    assert constants.factor == "2"
    assert constants.traced_factor == "2"
    assert report.suites["theorem"].check("factor_traced").passed
    assert art.solution is not None


def test_remark_substitution_zeroes_the_scalar_parts():
    report = run(RunConfig(algebra="rank1", mu="1", suites=["theorem"]))
    remark = report.remark
    assert remark is not None
    assert remark.nu0 == "-2"
    assert remark.numerator_at_nu0 == "0"
    assert remark.m_star_at_nu0 == "0"
    assert remark.m_paper_at_nu0 == "0"
    assert remark.scalar_parts_vanish


def test_report_written_to_file(tmp_path):
    out = tmp_path / "report.json"
    run(RunConfig(algebra="rank1", suites=["jordan", "lie"], out=str(out)))
    data = json.loads(out.read_text())
    assert data["algebra"] == "rank1"
    assert data["suites"]["lie"]["passed"] is True


def test_verify_exit_codes(capsys):
    assert main(["verify", "--algebra", "rank1", "--suites", "jordan,lie,chart", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert main(["verify", "--mu", "0"]) == 2
    assert main(["verify", "--algebra", "nonsense"]) == 2
    assert main(["verify", "--perturb", "1,0"]) == 2


def test_negative_control_fails_with_exit_one():
    assert main(["verify", "--algebra", "rank1", "--suites", "lie,chart", "--perturb", "1,0,0"]) == 1


def test_list_and_show(capsys):
    assert main(["list-algebras"]) == 0
    assert "spin:k" in capsys.readouterr().out
    assert main(["show", "--what", "rho", "--format", "json"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table["u:e"] == "d_z1"
    assert main(["show", "--what", "dpi", "--m", "0", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["u:e"] == "-d_z1"
    assert main(["show", "--what", "killing"]) == 0


def test_unknown_subcommand_is_a_usage_error():
    assert main(["frobnicate"]) == 2
