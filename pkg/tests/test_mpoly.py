import random

import pytest
from hypothesis import given, settings, strategies as st

from jordan_star.exactnum.scalar import Scalar
from jordan_star.mpoly.poly import Poly, UnknownVariable, VarSet, VarSetMismatch, random_poly

XY = VarSet(["x", "y"])
x, y = Poly.variables(XY)
nu = Scalar.nu(1)

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=5,
).map(lambda terms: Poly(XY, terms))


def test_standard_varsets():
    assert VarSet.phase_space(2).names == ("l1", "l2", "lp1", "lp2")
    assert VarSet.fourier(1).names == ("l1", "eta1")
    assert VarSet.holomorphic(1).names == ("z1", "zb1")
    assert VarSet.tube(3).names == ("z1", "z2", "z3")
    with pytest.raises(ValueError):
        VarSet(["a", "a"])
    with pytest.raises(VarSetMismatch):
        VarSet.tube(3).half


def test_arithmetic_and_cancellation():
    p = (x + y) ** 2
    assert p == x**2 + x * y * 2 + y**2
    assert p - p == Poly.zero(XY)
    assert not (p - p)
    assert (x + 1).constant_term() == 1
    assert p.degree() == 2


def test_scalar_coefficients_in_nu():
    p = x * nu + y * Scalar.nu(-1)
    assert p.nu_degrees() == [-1, 1]
    assert p.reflect_nu() == x * (-nu) - y * Scalar.nu(-1)
    assert p.nu_part(1) == x
    assert p.truncate_nu(1) == y * Scalar.nu(-1)
    assert p.evaluate_nu(2) == x * 2 + y * Scalar.constant("1/2")


def test_derivatives():
    p = x**3 * y + y**2
    assert p.diff("x") == x**2 * y * 3
    assert p.diff(1) == x**3 + y * 2
    assert p.diff("x", 2) == x * y * 6
    assert p.diff_multi((1, 1)) == x**2 * 3
    with pytest.raises(UnknownVariable):
        p.diff("w")


def test_substitution_into_other_varset():
    uv = VarSet(["u", "v"])
    u, v = Poly.variables(uv)
    p = x * y + 1
    assert p.substitute({"x": u + v, "y": u - v}) == u**2 - v**2 + 1


def test_mismatched_varsets_do_not_mix():
    with pytest.raises(VarSetMismatch):
        x + Poly.var(VarSet(["x"]), "x")


def test_random_poly_is_reproducible():
    a = random_poly(XY, random.Random(3))
    b = random_poly(XY, random.Random(3))
    assert a == b


@settings(max_examples=60)
@given(polys, polys, polys)
def test_polynomial_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60)
@given(polys, polys)
def test_leibniz_rule(p, q):
    assert (p * q).diff("x") == p.diff("x") * q + p * q.diff("x")
