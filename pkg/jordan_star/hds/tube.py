"""Conformal vector fields on the tube and the derived holomorphic discrete series.

    X(z)     = u + Tz + P(z)v            for X = (u, T, v)
    Tr DX(z) = tr T + 2 tau(z, v)
    dpi_m(X) = -m (r/n) Tr DX(z) - sum_a X(z)^a d_z^a
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ

from jordan_star.exactnum.matrices import object_array, trace
from jordan_star.exactnum.scalar import as_scalar
from jordan_star.kkt.graded import GradedLieAlgebra, LieElement
from jordan_star.mpoly.poly import Poly, VarSet
from jordan_star.utils.report import SuiteReport
from jordan_star.weyl.operator import WeylOperator, commutator

logger = logging.getLogger(__name__)

DPI_PROBES = (0, 1)


@dataclass(eq=False)
class TubeField:
    X: LieElement
    field: List[Poly]
    trace_dx: Poly

    @property
    def varset(self) -> VarSet:
        return self.trace_dx.varset

    def derivative(self) -> np.ndarray:
        """DX(z)[a, b] = d X(z)^a / d z^b."""
        n = len(self.field)
        out = np.empty((n, n), dtype=object)
        for a in range(n):
            for b in range(n):
                out[a, b] = self.field[a].diff(b)
        return out


def _as_poly(vs: VarSet, value) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(vs, value)


def symbolic_z(g: GradedLieAlgebra) -> np.ndarray:
    vs = VarSet.tube(g.n)
    return g.jordan.symbolic_element(vs, vs.names).coords


def tube_field(g: GradedLieAlgebra, X) -> TubeField:
    X = X if isinstance(X, LieElement) else g.from_coords(X)
    A = g.jordan
    z = symbolic_z(g)
    vs = z[0].varset
    field = object_array(X.u) + X.T @ z + A.quadratic_matrix(z) @ object_array(X.v)
    trace_dx = _as_poly(vs, trace(X.T)) + _as_poly(vs, A.tau(z, X.v)) * 2
    return TubeField(X, [_as_poly(vs, f) for f in field], trace_dx)


def dpi(X: TubeField, m, rank_ratio) -> WeylOperator:
    """dpi_m(X) with rank_ratio = r/n."""
    m = as_scalar(m)
    scalar = X.trace_dx * (-(m * rank_ratio))
    return WeylOperator.first_order(scalar, [-f for f in X.field])


def rank_ratio(g: GradedLieAlgebra):
    return QQ(g.jordan.rank, g.n)


def dpi_table(g: GradedLieAlgebra, m) -> List[WeylOperator]:
    ratio = rank_ratio(g)
    return [dpi(tube_field(g, g.basis_element(i)), m, ratio) for i in range(g.dim)]


def combine(ops: Sequence[WeylOperator], coords) -> WeylOperator:
    total = WeylOperator.zero(ops[0].varset)
    for k, c in enumerate(coords):
        if c:
            total = total + ops[k] * c
    return total


def representation_sign(
    g: GradedLieAlgebra, ops: Sequence[WeylOperator]
) -> Tuple[Optional[int], Optional[Tuple[int, int]], object]:
    """+1 if [op_i, op_j] = op([X_i, X_j]) on every pair, -1 if it is -op(...), else None and a witness."""
    signs = {1, -1}
    witness = residual = None
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            comm = commutator(ops[i], ops[j])
            target = combine(ops, g.structure[i, j, :])
            holds = {s for s in signs if comm == target * s}
            if not holds and witness is None:
                witness, residual = (i, j), comm - target
            signs &= holds
            if not signs:
                return None, witness, residual
    return (1 if 1 in signs else -1), None, None


def sign_name(sign: Optional[int]) -> Optional[str]:
    return {1: "homomorphism", -1: "anti-homomorphism"}.get(sign)


def verify_dpi_homomorphism(g: GradedLieAlgebra) -> SuiteReport:
    """The residual is affine in m, so m = 0 and m = 1 cover every m."""
    report = SuiteReport(suite="theorem")
    signs = []
    for m in DPI_PROBES:
        sign, witness, residual = representation_sign(g, dpi_table(g, m))
        report.add(f"dpi_representation_m{m}", sign is not None, witness, residual, detail=sign_name(sign))
        signs.append(sign)
    consistent = len(set(signs)) == 1 and signs[0] is not None
    report.add("dpi_sign_independent_of_m", consistent)
    report.record("dpi_sign", sign_name(signs[0]) if consistent else None)
    return report


def verify_component_formulas(g: GradedLieAlgebra) -> SuiteReport:
    """Translation, dilation and special conformal cases of dpi_m written out directly."""
    report = SuiteReport(suite="theorem")
    A = g.jordan
    n, r = g.n, A.rank
    ratio = rank_ratio(g)
    z = symbolic_z(g)
    vs = z[0].varset
    d = [WeylOperator.derivative(vs, a) for a in range(n)]

    def field_part(values) -> WeylOperator:
        total = WeylOperator.zero(vs)
        for a in range(n):
            total = total - WeylOperator.multiplication(_as_poly(vs, values[a])) * d[a]
        return total

    fields = [tube_field(g, g.basis_element(i)) for i in range(g.dim)]
    bad_trace = next((i for i, f in enumerate(fields) if trace(f.derivative()) != f.trace_dx), None)
    report.add(
        "trace_of_derivative",
        bad_trace is None,
        [bad_trace] if bad_trace is not None else None,
        detail="Tr DX(z) = tr T + 2 tau(z, v)",
    )

    bad = {"translation": None, "dilation": None, "special_conformal": None}
    tau_reading = True
    for m in DPI_PROBES:
        for i in range(g.dim):
            X = g.basis_element(i)
            actual = dpi(fields[i], m, ratio)
            if i in g.g_minus:
                expected = field_part(X.u)
                kind = "translation"
            elif i in g.g_zero:
                scalar = WeylOperator.constant(vs, -m * ratio * trace(X.T))
                expected = scalar + field_part(X.T @ z)
                kind = "dilation"
            else:
                v = object_array(X.v)
                jordan_trace = _as_poly(vs, A.trace_of(A.product(z, v)))
                expected = WeylOperator.multiplication(jordan_trace * (-2 * m)) + field_part(A.quadratic_matrix(z) @ v)
                kind = "special_conformal"
                tau_form = _as_poly(vs, A.tau(z, v))
                alt = WeylOperator.multiplication(tau_form * (-2 * m)) + field_part(A.quadratic_matrix(z) @ v)
                tau_reading = tau_reading and alt == actual
            if actual != expected and bad[kind] is None:
                bad[kind] = i
    for kind, index in bad.items():
        report.add(f"component_{kind}", index is None, [index] if index is not None else None)
    report.record("trace_form_reading_holds", tau_reading)
    report.record("n_equals_r", n == r)
    return report
