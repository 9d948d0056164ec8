"""Symbolic verification of the Euclidean Jordan algebra axioms."""
from __future__ import annotations

import logging
import time

from jordan_star.exactnum.matrices import arrays_equal, is_zero_array, leading_minors, rational_identity, trace
from jordan_star.jordan.algebra import JordanAlgebra
from jordan_star.mpoly.poly import VarSet
from jordan_star.utils.report import SuiteReport

logger = logging.getLogger(__name__)


def _first_nonzero(arr):
    for i, entry in enumerate(arr.flat):
        if entry:
            return i, entry
    return None, None


def validate_jordan(A: JordanAlgebra) -> SuiteReport:
    """Check the axioms with two vectors of indeterminate coordinates; failures go in the report."""
    start = time.perf_counter()
    report = SuiteReport(suite="jordan")
    n = A.dim
    xs = [f"x{a + 1}" for a in range(n)]
    ys = [f"y{a + 1}" for a in range(n)]
    varset = VarSet(xs + ys)
    x = A.symbolic_element(varset, xs).coords
    y = A.symbolic_element(varset, ys).coords

    # commutativity
    residual = A.product(x, y) - A.product(y, x)
    idx, bad = _first_nonzero(residual)
    report.add("commutativity", bad is None, [idx] if idx is not None else None, bad)

    # x o (x^2 o y) = x^2 o (x o y)
    x2 = A.product(x, x)
    residual = A.product(x, A.product(x2, y)) - A.product(x2, A.product(x, y))
    idx, bad = _first_nonzero(residual)
    report.add("jordan_identity", bad is None, [idx] if idx is not None else None, bad)

    # unit: L(e) = Id, which is e o x = x for symbolic x
    residual = A.product(A.unit, x) - x
    idx, bad = _first_nonzero(residual)
    report.add("unit", bad is None, [idx] if idx is not None else None, bad)

    # tau Gram matrix symmetric positive definite
    gram = A.gram()
    symmetric = arrays_equal(gram, gram.T)
    minors = leading_minors(gram) if symmetric else []
    positive = symmetric and all(m > 0 for m in minors)
    report.add(
        "trace_form_positive_definite",
        positive,
        residual=None if positive else f"leading minors {[str(m) for m in minors]}",
        detail="symmetric" if symmetric else "Gram matrix not symmetric",
    )

    # Tr(x box y) = tau(x, y)
    residual = trace(A.box_matrix(x, y)) - A.tau(x, y)
    report.add("trace_of_box", not residual, residual=residual or None)

    # (x box y) z = {x, y, z}, P(z) v = {z, v, z}
    zs = [f"z{a + 1}" for a in range(n)]
    vs3 = VarSet(xs + ys + zs)
    x3 = A.symbolic_element(vs3, xs).coords
    y3 = A.symbolic_element(vs3, ys).coords
    z3 = A.symbolic_element(vs3, zs).coords
    residual = A.box_matrix(x3, y3) @ z3 - A.triple(x3, y3, z3)
    report.add("box_is_triple", is_zero_array(residual))
    residual = A.quadratic_matrix(z3) @ y3 - A.triple(z3, y3, z3)
    report.add("quadratic_is_triple", is_zero_array(residual))

    report.add("unit_is_identity", arrays_equal(A.left_matrix(A.unit), rational_identity(n)))
    report.record("dim", n)
    report.record("rank", A.rank)
    report.seconds = time.perf_counter() - start
    logger.info("jordan suite on %s: %s in %.2fs", A.name, "pass" if report.passed else "FAIL", report.seconds)
    return report
