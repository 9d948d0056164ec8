import pytest

from jordan_star.exactnum.scalar import Scalar
from jordan_star.mpoly.poly import Poly, VarSet
from jordan_star.starrep.holomorphic import holomorphic_field, jacobian, rho_hat, rho_hat_table
from jordan_star.starrep.verify import (
    fields_for_basis,
    measure_kappa_h,
    star_side_operator,
    star_side_table,
    verify_prop_2_7,
    verify_rho_homomorphism,
)
from jordan_star.weyl.operator import WeylOperator

nu = Scalar.nu(1)
T = VarSet.tube(1)
z = Poly.var(T, "z1")
dz = WeylOperator.derivative(T, "z1")
Z = WeylOperator.multiplication(z)


def test_sl2_rho_hat(sl2):
    rho_u, rho_e, rho_v = rho_hat_table(sl2)
    assert rho_u == dz
    assert rho_e == Z * dz + WeylOperator.constant(T, Scalar.nu(-1) + Scalar.constant("1/2"))
    assert rho_v == Z * Z * dz + WeylOperator.multiplication(z * (Scalar.nu(-1) * 2 + 1))


def test_tau_depends_on_mu(sl2_half):
    field = holomorphic_field(sl2_half, sl2_half.g.basis_element(1))
    assert field.tau == Poly.constant(T, Scalar.monomial("1/2", -1) + Scalar.constant("1/2"))
    assert field.l == [z]


def test_rho_hat_accepts_elements_and_coordinates(sl2):
    g = sl2.g
    X = g.basis_element(0) + g.basis_element(2)
    assert rho_hat(sl2, X) == rho_hat(sl2, g.coords(X))


def test_rho_hat_is_an_anti_homomorphism(sl2, spin3):
    for ctx in (sl2, spin3):
        report = verify_rho_homomorphism(ctx)
        assert report.passed, report.failures()
        assert report.constants["rho_sign"] == "anti-homomorphism"


def test_h_is_the_jacobian_of_l(sl2, spin3):
    for ctx in (sl2, spin3):
        assert measure_kappa_h(ctx, fields_for_basis(ctx)) == 1


def test_jacobian_of_quadratic_field():
    assert jacobian([z**2])[0, 0] == z * 2


def test_star_side_is_nu_reflected(sl2):
    rho = rho_hat_table(sl2)
    D = star_side_table(sl2)
    assert D[0] == -dz
    for d, r in zip(D, rho):
        assert d == -r.reflect_nu()


def test_star_side_before_restriction_is_holomorphic(sl2):
    full = star_side_operator(sl2, 2)
    assert not full.involves([1])


@pytest.mark.parametrize("name", ["sl2", "sl2_half", "spin3"])
def test_fourier_suite(name, request):
    ctx = request.getfixturevalue(name)
    report = verify_prop_2_7(ctx, seed=3)
    assert report.passed, report.failures()
    assert report.constants["prop_2_7_relation"] == "nu_reflected"
    assert report.constants["kappa_h"] == "1"


@pytest.mark.slow
def test_fourier_suite_on_sym2(sym2):
    assert verify_prop_2_7(sym2, seed=3).passed
