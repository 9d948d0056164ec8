import dataclasses

import pytest

from jordan_star.chart.darboux import (
    SeriesNotTerminating,
    _exp_ad,
    build_chart,
    moment_map,
    poisson,
    verify_strongly_hamiltonian,
)
from jordan_star.jordan.instances import make_rank_one
from jordan_star.kkt.symplectic import symplectic_basis
from jordan_star.mpoly.poly import Poly, VarSet, VarSetMismatch
from jordan_star.pipelines import verify_pipeline
from jordan_star.utils import cache

PS = VarSet.phase_space(1)
l, lp = Poly.variables(PS)


def test_poisson_bracket_of_coordinates():
    assert poisson(l, lp) == 1
    assert poisson(lp, l) == -1
    assert poisson(l**2, lp) == l * 2
    with pytest.raises(VarSetMismatch):
        poisson(l, Poly.var(VarSet.tube(1), "z1"))


def test_sl2_moment_maps(sl2):
    lam_u, lam_h, lam_v = sl2.moment_maps()
    assert lam_u == lp
    assert lam_h == l * lp + 2
    assert lam_v == l * 4 + l**2 * lp


def test_moment_maps_scale_with_mu(sl2_half):
    lam_u, lam_h, lam_v = sl2_half.moment_maps()
    assert lam_h == l * lp + 1
    assert lam_v == l * 2 + l**2 * lp


def test_moment_map_of_element_matches_table(sl2):
    g = sl2.g
    assert moment_map(sl2, g.basis_element(2)) == sl2.moment_maps()[2]
    assert sl2.moment_of_coords(g.o).constant_term() == 2


@pytest.mark.parametrize("name", ["sl2", "sl2_half", "spin3", "sym2"])
def test_strongly_hamiltonian(name, request):
    ctx = request.getfixturevalue(name)
    report = verify_strongly_hamiltonian(ctx)
    assert report.passed, report.failures()


def test_broken_table_breaks_the_poisson_relation(sl2):
    g = sl2.g.perturbed(1, 0, 0)
    ctx = build_chart(g, symplectic_basis(g))
    report = verify_strongly_hamiltonian(ctx)
    assert not report.check("poisson_homomorphism").passed


def test_exp_ad_of_a_non_nilpotent_element_raises(sl2):
    g = sl2.g
    u = g.coords(g.basis_element(0))
    with pytest.raises(SeriesNotTerminating):
        _exp_ad(g, g.E, u)


def _non_nilpotent_basis(g):
    basis = symplectic_basis(g)
    return dataclasses.replace(basis, Lp=[basis.Lp[0] + g.E])


def test_chart_refuses_a_non_nilpotent_direction(sl2):
    with pytest.raises(SeriesNotTerminating):
        build_chart(sl2.g, _non_nilpotent_basis(sl2.g))


def test_pipeline_reports_non_terminating_chart_as_failed(monkeypatch):
    cache.clear()
    monkeypatch.setattr(verify_pipeline, "symplectic_basis", _non_nilpotent_basis)
    report, _ = verify_pipeline.run_pipeline(make_rank_one(), 1, suites=["chart"])
    cache.clear()
    check = report.suites["chart"].check("construction")
    assert not report.passed
    assert not check.passed
    assert "SeriesNotTerminating" in check.residual
