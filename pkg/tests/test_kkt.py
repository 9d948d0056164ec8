import pytest
from sympy import QQ

from jordan_star.exactnum.matrices import arrays_equal, rational_identity
from jordan_star.jordan.instances import DATA_DIR, load_from_file, make_rank_one, make_spin_factor, make_sym_matrices
from jordan_star.kkt.graded import bracket, build_kkt, theta
from jordan_star.kkt.killing import compare_killing_forms
from jordan_star.kkt.symplectic import NotInQ, omega_form, spur, symplectic_basis
from jordan_star.kkt.verify import jacobi_failures, measured_grading_sign, verify_lie_structure


@pytest.fixture(scope="module")
def g_sl2():
    return build_kkt(make_rank_one(), 1)


def test_sl2_bracket_table(g_sl2):
    u, h, v = (g_sl2.basis_element(i) for i in range(3))
    assert g_sl2.labels() == ["u:e", "h1", "v:e"]
    assert bracket(u, v) == h * -2
    assert bracket(h, u) == u
    assert bracket(h, v) == -v
    assert theta(u) == v and theta(h) == -h


def test_sl2_killing_and_grading(g_sl2):
    assert g_sl2.killing_coords(g_sl2.E, g_sl2.E) == QQ(2)
    assert g_sl2.killing_coords(g_sl2.o, g_sl2.o) == QQ(2)
    assert measured_grading_sign(g_sl2) == -1
    assert compare_killing_forms(g_sl2) == ("gl", QQ(1))


def test_base_point_scales_with_mu():
    g = build_kkt(make_rank_one(), "1/2")
    assert g.c == QQ(1, 2)
    assert g.killing_coords(g.o, g.o) == QQ(1, 2)


def test_zero_mu_is_rejected():
    with pytest.raises(ValueError):
        build_kkt(make_rank_one(), 0)


def test_symplectic_basis_and_spur(g_sl2):
    basis = symplectic_basis(g_sl2)
    assert basis.is_symplectic()
    assert arrays_equal(basis.gram(), rational_identity(1))
    assert spur(g_sl2.E, basis) == 1
    with pytest.raises(NotInQ):
        omega_form(g_sl2.basis_element(1), g_sl2.basis_element(0))


@pytest.mark.parametrize(
    "factory, dim",
    [(make_rank_one, 3), (lambda: make_spin_factor(2), 6), (lambda: make_spin_factor(3), 10), (lambda: make_sym_matrices(2), 10)],
)
def test_lie_suite_passes(factory, dim):
    g = build_kkt(factory(), 1)
    report = verify_lie_structure(g)
    assert report.passed, report.failures()
    assert g.dim == dim
    assert report.constants["grading_sign"] == "-1"


def test_beta_o_normalization_depends_on_rank():
    _, kappa = compare_killing_forms(build_kkt(make_spin_factor(3), 1))
    assert kappa == QQ(1)
    assert compare_killing_forms(build_kkt(make_spin_factor(3), 1))[0] == "g0"


@pytest.mark.slow
def test_hermitian_gives_su22():
    g = build_kkt(load_from_file(DATA_DIR / "herm2.json"), 1)
    assert g.dim == 15
    assert verify_lie_structure(g).passed


def test_perturbed_table_is_detected(g_sl2):
    broken = g_sl2.perturbed(0, 2, 1)
    report = verify_lie_structure(broken)
    assert not report.check("bracket_table_matches_formula").passed
    assert report.passed is False
    # the original is untouched
    assert not jacobi_failures(g_sl2)
    assert verify_lie_structure(g_sl2).passed


def test_perturbation_must_respect_grading(g_sl2):
    with pytest.raises(ValueError):
        g_sl2.perturbed(0, 1, 2)
