"""Partial Fourier transform in l' and the passage to holomorphic coordinates, as Weyl-algebra maps.

Kernel exp(-i sum eta^a l'^a) fixes the generator images

    l^a -> l^a          d_l^a  -> d_l^a
    l'^a -> i d_eta^a   d_l'^a -> i eta^a

and z = l + i nu eta turns (l, eta) into (z, zb).
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from jordan_star.exactnum.scalar import Scalar, gaussian
from jordan_star.mpoly.poly import Poly, VarSet, VarSetMismatch
from jordan_star.utils.report import SuiteReport
from jordan_star.weyl.operator import WeylOperator, commutator, map_generators, weyl_mul

logger = logging.getLogger(__name__)

I = Scalar.imaginary_unit()
# 1/(2 i nu) and i nu
ETA_FROM_Z = Scalar.monomial(gaussian(0, "-1/2"), -1)
I_NU = Scalar.monomial(gaussian(0, 1), 1)


def _mult(varset: VarSet, i: int) -> WeylOperator:
    return WeylOperator.multiplication(Poly.var(varset, varset.names[i]))


def _deriv(varset: VarSet, i: int) -> WeylOperator:
    return WeylOperator.derivative(varset, i)


def fourier_images(n: int):
    target = VarSet.fourier(n)
    mult = [_mult(target, a) for a in range(n)] + [_deriv(target, n + a) * I for a in range(n)]
    deriv = [_deriv(target, a) for a in range(n)] + [_mult(target, n + a) * I for a in range(n)]
    return target, mult, deriv


def holomorphic_images(n: int):
    target = VarSet.holomorphic(n)
    z = [_mult(target, a) for a in range(n)]
    zb = [_mult(target, n + a) for a in range(n)]
    dz = [_deriv(target, a) for a in range(n)]
    dzb = [_deriv(target, n + a) for a in range(n)]
    half = Scalar.constant(gaussian("1/2"))
    mult = [(z[a] + zb[a]) * half for a in range(n)] + [(z[a] - zb[a]) * ETA_FROM_Z for a in range(n)]
    deriv = [dz[a] + dzb[a] for a in range(n)] + [(dz[a] - dzb[a]) * I_NU for a in range(n)]
    return target, mult, deriv


def fourier_conjugate(D: WeylOperator) -> WeylOperator:
    """(l, l') operator -> (l, eta) operator."""
    n = D.varset.half
    if D.varset != VarSet.phase_space(n):
        raise VarSetMismatch(f"expected phase-space variables, got {D.varset}")
    target, mult, deriv = fourier_images(n)
    return map_generators(D, target, mult, deriv)


def to_holomorphic_frame(D: WeylOperator) -> WeylOperator:
    """(l, eta) operator -> (z, zb) operator."""
    n = D.varset.half
    if D.varset != VarSet.fourier(n):
        raise VarSetMismatch(f"expected Fourier variables, got {D.varset}")
    target, mult, deriv = holomorphic_images(n)
    return map_generators(D, target, mult, deriv)


def _ccr_holds(varset: VarSet, mult: Sequence[WeylOperator], deriv: Sequence[WeylOperator]) -> bool:
    """[d_i, x_j] = delta_ij and the other two families commute."""
    one = WeylOperator.identity(varset)
    width = len(mult)
    for i in range(width):
        for j in range(width):
            expected = one if i == j else WeylOperator.zero(varset)
            if commutator(deriv[i], mult[j]) != expected:
                return False
            if commutator(mult[i], mult[j]) or commutator(deriv[i], deriv[j]):
                return False
    return True


def verify_frame_maps(n: int, operators: Optional[List[WeylOperator]] = None, pairs: int = 6) -> SuiteReport:
    """Both frame maps respect the commutation relations and products of the given operators."""
    report = SuiteReport(suite="fourier")
    target, mult, deriv = fourier_images(n)
    report.add("fourier_ccr", _ccr_holds(target, mult, deriv))
    target, mult, deriv = holomorphic_images(n)
    report.add("holomorphic_ccr", _ccr_holds(target, mult, deriv))

    bad = None
    ops = list(operators or [])
    checked = 0
    for i in range(len(ops)):
        for j in range(i, len(ops)):
            if checked >= pairs:
                break
            checked += 1
            P, Q = ops[i], ops[j]
            fP, fQ = fourier_conjugate(P), fourier_conjugate(Q)
            if fourier_conjugate(weyl_mul(P, Q)) != weyl_mul(fP, fQ):
                bad = (i, j)
                break
            if to_holomorphic_frame(weyl_mul(fP, fQ)) != weyl_mul(to_holomorphic_frame(fP), to_holomorphic_frame(fQ)):
                bad = (i, j)
                break
        if bad is not None:
            break
    report.add("frame_maps_multiplicative", bad is None, bad, detail=f"{checked} operator pairs")
    return report
