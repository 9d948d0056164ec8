import pytest
from sympy import QQ

from jordan_star.chart.darboux import build_chart
from jordan_star.exactnum.scalar import Scalar
from jordan_star.hds.equivalence import (
    EquivalenceSolution,
    NoEquivalence,
    compare_with_theorem,
    m_paper,
    solve_equivalence,
    solve_operator_equivalence,
)
from jordan_star.hds.tube import dpi_table, rank_ratio, tube_field, verify_component_formulas, verify_dpi_homomorphism
from jordan_star.jordan.instances import make_rank_one
from jordan_star.kkt.graded import build_kkt
from jordan_star.kkt.symplectic import symplectic_basis
from jordan_star.mpoly.poly import Poly, VarSet
from jordan_star.starrep.holomorphic import perturb_scalar, rho_hat_table
from jordan_star.starrep.verify import fields_for_basis, measure_kappa_h, star_side_table
from jordan_star.weyl.operator import WeylOperator

nu = Scalar.nu(1)
T = VarSet.tube(1)
z = Poly.var(T, "z1")
dz = WeylOperator.derivative(T, "z1")


def test_tube_field_of_special_conformal(sl2):
    field = tube_field(sl2.g, sl2.g.basis_element(2))
    assert field.field == [z**2]
    assert field.trace_dx == z * 2


def test_dpi_on_sl2(sl2):
    dpi_u, dpi_e, dpi_v = dpi_table(sl2.g, 1)
    assert dpi_u == -dz
    assert dpi_e == -WeylOperator.multiplication(z) * dz - WeylOperator.constant(T, 1)
    assert dpi_v == -WeylOperator.multiplication(z**2) * dz - WeylOperator.multiplication(z * 2)


def test_dpi_is_a_homomorphism_for_every_m(sl2, spin3):
    for ctx in (sl2, spin3):
        report = verify_dpi_homomorphism(ctx.g)
        assert report.passed, report.failures()
        assert report.constants["dpi_sign"] == "homomorphism"


def test_component_formulas(sl2, spin3):
    report = verify_component_formulas(sl2.g)
    assert report.passed, report.failures()
    assert report.constants["trace_form_reading_holds"] == "True"
    report = verify_component_formulas(spin3.g)
    assert report.passed, report.failures()
    # n = 3, r = 2: only the Jordan-trace reading of the special conformal term holds
    assert report.constants["trace_form_reading_holds"] == "False"
    assert rank_ratio(spin3.g) == QQ(2, 3)


def test_equivalence_on_sl2(sl2):
    solution = solve_equivalence(sl2)
    assert solution.alpha == "-id"
    assert solution.m == (nu + 2) * Scalar.monomial("1/2", -1)
    assert m_paper(sl2.g) == (nu + 2) * Scalar.monomial("1/4", -1)


def test_comparison_with_the_closed_formula(sl2):
    solution = solve_equivalence(sl2)
    star_side = solve_operator_equivalence(sl2.g, star_side_table(sl2))
    report = compare_with_theorem(sl2.g, solution, Scalar.one(), star_side)
    assert report.match == "proportional"
    assert report.factor == "2"
    assert report.traced_factor == "2"
    assert report.factor_traced
    assert report.kappa_g == "1"
    assert report.star_side_alpha == "+id"
    assert star_side.m == (nu - 2) * Scalar.monomial("1/2", -1)


def test_equivalence_at_other_mu(sl2_half):
    solution = solve_equivalence(sl2_half)
    assert solution.m == (nu + 1) * Scalar.monomial("1/2", -1)


@pytest.mark.parametrize("mu", [2, -3])
def test_rank_one_equivalence_across_mu(mu):
    g = build_kkt(make_rank_one(), mu)
    ctx = build_chart(g, symplectic_basis(g))
    solution = solve_equivalence(ctx)
    assert solution.alpha == "-id"
    # m* = (2 mu + nu) / (2 nu)
    assert solution.m == Scalar.constant("1/2") + Scalar.nu(-1) * mu
    assert solution.m == m_paper(g) * 2
    report = compare_with_theorem(g, solution, measure_kappa_h(ctx, fields_for_basis(ctx)))
    assert report.match == "proportional"
    assert report.factor == "2"
    assert report.factor_traced


def test_equivalence_on_spin_factor(spin3):
    # m* = n (2 mu + nu) / (2 nu r)
    solution = solve_equivalence(spin3)
    assert solution.alpha == "-id"
    assert solution.m == (nu + 2) * Scalar.monomial("3/4", -1)


def test_perturbed_scalar_has_no_equivalence(sl2):
    table = perturb_scalar(rho_hat_table(sl2), 1)
    with pytest.raises(NoEquivalence) as info:
        solve_operator_equivalence(sl2.g, table)
    assert info.value.residual is not None


def test_perturbed_vector_field_has_no_equivalence(sl2):
    table = rho_hat_table(sl2)
    table[0] = table[0] + WeylOperator.multiplication(z) * dz
    with pytest.raises(NoEquivalence):
        solve_operator_equivalence(sl2.g, table)


@pytest.mark.slow
def test_equivalence_on_sym2(sym2):
    solution = solve_equivalence(sym2)
    assert solution.alpha == "-id"
    # n = 3, r = 2
    assert solution.m == (nu + 2) * Scalar.monomial("3/4", -1)
    assert (solution.m / m_paper(sym2.g)) == 2


def test_factor_is_traced_to_the_measured_constants(spin3):
    solution = solve_equivalence(spin3)
    kappa_h = measure_kappa_h(spin3, fields_for_basis(spin3))
    report = compare_with_theorem(spin3.g, solution, kappa_h)
    assert report.kappa_g == "1"
    assert report.factor == "2"
    assert report.traced_factor == "2"
    assert report.factor_traced


def test_untraced_factor_is_flagged(sl2):
    solution = EquivalenceSolution("-id", m_paper(sl2.g) * 7)
    report = compare_with_theorem(sl2.g, solution, Scalar.one())
    assert report.match == "proportional"
    assert report.factor == "7"
    assert report.traced_factor == "2"
    assert not report.factor_traced


def test_missing_kappa_h_leaves_the_factor_untraced(sl2):
    report = compare_with_theorem(sl2.g, solve_equivalence(sl2))
    assert report.traced_factor is None
    assert not report.factor_traced
