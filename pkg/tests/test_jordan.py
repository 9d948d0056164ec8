import json

import pytest
from sympy import QQ

from jordan_star.jordan.algebra import InvalidDimension, ValidationFailed
from jordan_star.jordan.instances import (
    DATA_DIR,
    from_selector,
    load_from_file,
    load_from_structure_constants,
    make_rank_one,
    make_spin_factor,
    make_sym_matrices,
)
from jordan_star.jordan.validate import validate_jordan


@pytest.mark.parametrize(
    "algebra, dim, rank",
    [
        (make_rank_one(), 1, 1),
        (make_spin_factor(2), 2, 2),
        (make_spin_factor(3), 3, 2),
        (make_sym_matrices(2), 3, 2),
    ],
)
def test_builtins_satisfy_the_axioms(algebra, dim, rank):
    report = validate_jordan(algebra)
    assert report.passed, report.failures()
    assert (algebra.dim, algebra.rank) == (dim, rank)


def test_hermitian_two_by_two_from_bundled_file():
    algebra = load_from_file(DATA_DIR / "herm2.json")
    assert (algebra.dim, algebra.rank, algebra.lie_dimension) == (4, 2, 15)
    assert validate_jordan(algebra).passed


def test_trace_form_and_trace():
    A = make_spin_factor(3)
    e = A.unit_element()
    assert A.trace_of(e.coords) == QQ(2)
    assert A.tau(e.coords, e.coords) == QQ(3)


def test_quadratic_representation_is_triple_product():
    A = make_sym_matrices(2)
    z = A.basis_element(0) + A.basis_element(2)
    v = A.basis_element(1)
    assert all(a == b for a, b in zip(A.quadratic_matrix(z.coords) @ v.coords, A.triple(z.coords, v.coords, z.coords)))


def test_selector_parsing():
    assert from_selector("rank1").dim == 1
    assert from_selector("spin:4").dim == 4
    assert from_selector("sym:3").dim == 6
    with pytest.raises(ValueError):
        from_selector("octonions")
    with pytest.raises(InvalidDimension):
        from_selector("spin:1")
    with pytest.raises(InvalidDimension):
        make_sym_matrices(0)


def test_non_jordan_table_is_rejected():
    data = make_spin_factor(2).to_json()
    # break commutativity on e0 o e1
    data["structure"][0][1][1] = "2"
    with pytest.raises(ValidationFailed) as info:
        load_from_structure_constants(data)
    assert info.value.check == "commutativity"


def test_indefinite_trace_form_is_rejected():
    # R + R^1 with e1 o e1 = -e0: a Jordan algebra, but not Euclidean
    data = make_spin_factor(2).to_json()
    data["structure"][1][1][0] = "-1"
    report = validate_jordan(load_from_structure_constants(data, validate=False))
    assert not report.check("trace_form_positive_definite").passed


def test_malformed_definition():
    with pytest.raises(ValueError):
        load_from_structure_constants({"dim": 1})


def test_fingerprint_ignores_the_name(tmp_path):
    data = make_rank_one().to_json()
    data["name"] = "renamed"
    path = tmp_path / "r.json"
    path.write_text(json.dumps(data))
    assert load_from_file(path).fingerprint() == make_rank_one().fingerprint()
