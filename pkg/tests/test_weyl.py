import random

import pytest
from hypothesis import given, settings, strategies as st

from jordan_star.exactnum.scalar import Scalar, gaussian
from jordan_star.mpoly.poly import Poly, VarSet, VarSetMismatch, random_poly
from jordan_star.weyl.fourier import fourier_conjugate, to_holomorphic_frame, verify_frame_maps
from jordan_star.weyl.moyal import left_star_operator, moyal_cochain, moyal_star, right_star_operator
from jordan_star.weyl.operator import WeylOperator, apply, commutator, weyl_mul
from jordan_star.weyl.verify import run_star_suite, verify_covariance, verify_property_B

nu = Scalar.nu(1)
I = Scalar.imaginary_unit()
PS = VarSet.phase_space(1)
l, lp = Poly.variables(PS)
PS2 = VarSet.phase_space(2)

phase_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.integers(-3, 3),
    max_size=4,
).map(lambda terms: Poly(PS, terms))


def test_normal_ordering():
    X = VarSet(["x"])
    x = WeylOperator.multiplication(Poly.var(X, "x"))
    d = WeylOperator.derivative(X, "x")
    assert weyl_mul(d, x) == x * d + WeylOperator.identity(X)
    assert commutator(d, x * x) == x * 2
    assert (d * d * x).order() == 2
    assert apply(d * x, Poly.var(X, "x") ** 2) == Poly.var(X, "x") ** 2 * 3


def test_first_order_parts():
    T = VarSet.tube(1)
    z = Poly.var(T, "z1")
    op = WeylOperator.first_order(z * 3, [z**2])
    assert op.scalar_part() == z * 3
    assert op.vector_part() == [z**2]
    assert op.order() == 1
    assert op.reflect_nu() == op


def test_moyal_on_coordinates():
    assert moyal_star(l, lp) == l * lp + nu
    assert moyal_star(lp, l) == l * lp - nu
    assert moyal_star(l, lp) - moyal_star(lp, l) == Poly.constant(PS, nu * 2)
    assert moyal_cochain(l**2, lp**2, 2) == Poly.constant(PS, 2)
    with pytest.raises(VarSetMismatch):
        moyal_star(l, Poly.var(PS2, "l1"))


@settings(max_examples=30, deadline=None)
@given(phase_polys, phase_polys, phase_polys)
def test_moyal_is_associative(p, q, r):
    assert moyal_star(moyal_star(p, q), r) == moyal_star(p, moyal_star(q, r))


@settings(max_examples=30, deadline=None)
@given(phase_polys, phase_polys)
def test_star_operators_reproduce_the_product(lam, u):
    assert apply(left_star_operator(lam), u) == moyal_star(lam, u)
    assert apply(right_star_operator(lam), u) == moyal_star(u, lam)


def test_left_multiplication_by_momentum():
    assert left_star_operator(lp) == WeylOperator.multiplication(lp) - WeylOperator.derivative(PS, "l1") * nu


def test_fourier_images_of_generators():
    F = VarSet.fourier(1)
    mult_lp = fourier_conjugate(WeylOperator.multiplication(lp))
    assert mult_lp == WeylOperator.derivative(F, "eta1") * I
    d_lp = fourier_conjugate(WeylOperator.derivative(PS, "lp1"))
    assert d_lp == WeylOperator.multiplication(Poly.var(F, "eta1")) * I
    with pytest.raises(VarSetMismatch):
        to_holomorphic_frame(WeylOperator.identity(PS))


def test_holomorphic_frame_of_a_translation():
    """(1/2nu) lambda_u * . with lambda_u = l' becomes -d_z."""
    H = VarSet.holomorphic(1)
    op = to_holomorphic_frame(fourier_conjugate(left_star_operator(lp))) * Scalar.monomial(gaussian("1/2"), -1)
    assert op == -WeylOperator.derivative(H, "z1")


@pytest.mark.parametrize("n", [1, 2])
def test_frame_maps_respect_the_commutation_relations(n):
    rng = random.Random(7)
    vs = VarSet.phase_space(n)
    ops = [left_star_operator(random_poly(vs, rng, max_degree=2, n_terms=3)) for _ in range(3)]
    report = verify_frame_maps(n, ops)
    assert report.passed, report.failures()


def test_star_suite_on_sl2(sl2):
    report = run_star_suite(sl2, trials=4, seed=1)
    assert report.passed, report.failures()
    assert report.constants["property_b_n"] == "3"


def test_covariance_on_spin_factor(spin3):
    report = verify_covariance(spin3)
    assert report.passed, report.failures()
    assert verify_property_B(spin3).passed


@pytest.mark.slow
def test_star_suite_on_sym2(sym2):
    assert run_star_suite(sym2, trials=3, seed=2).passed
