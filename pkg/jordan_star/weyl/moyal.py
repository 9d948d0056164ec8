"""Moyal star product on polynomials in (l, l') and its left/right multiplication operators.

    u * v = sum_{P,Q} nu^(|P|+|Q|) (-1)^|Q| / (P! Q!) (d_l^P d_l'^Q u)(d_l'^P d_l^Q v)

which is exp(nu Lambda) for the standard Poisson tensor, expanded with
multi-indices. Every sum terminates at the degrees of its arguments.
"""
from __future__ import annotations

import logging
from math import factorial
from typing import Dict, Iterator, List, Tuple

from sympy import QQ

from jordan_star.exactnum.scalar import Scalar
from jordan_star.mpoly.poly import Poly, VarSetMismatch, multi_indices
from jordan_star.weyl.operator import WeylOperator

logger = logging.getLogger(__name__)


def _degrees(p: Poly) -> List[int]:
    return [max(p.degree_in([i]), 0) for i in range(len(p.varset))]


def _weight(P, Q) -> Tuple[int, object]:
    """(|P| + |Q|, (-1)^|Q| / (P! Q!))"""
    denom = 1
    for k in tuple(P) + tuple(Q):
        denom *= factorial(k)
    sign = -1 if sum(Q) % 2 else 1
    return sum(P) + sum(Q), QQ(sign, denom)


def _pairs(bounds_p, bounds_q) -> Iterator[Tuple[tuple, tuple]]:
    for P in multi_indices(bounds_p):
        for Q in multi_indices(bounds_q):
            yield P, Q


def _check_phase_space(u: Poly, v: Poly) -> int:
    if u.varset != v.varset:
        raise VarSetMismatch(f"{u.varset} vs {v.varset}")
    return u.varset.half


def moyal_terms(u: Poly, v: Poly) -> Dict[int, Poly]:
    """k -> c_k(u, v) for every k with a nonzero cochain."""
    n = _check_phase_space(u, v)
    du, dv = _degrees(u), _degrees(v)
    bounds_p = [min(du[a], dv[n + a]) for a in range(n)]
    bounds_q = [min(du[n + a], dv[a]) for a in range(n)]
    out: Dict[int, Poly] = {}
    for P, Q in _pairs(bounds_p, bounds_q):
        k, weight = _weight(P, Q)
        left = u.diff_multi(tuple(P) + tuple(Q))
        if not left:
            continue
        right = v.diff_multi(tuple(Q) + tuple(P))
        if not right:
            continue
        term = left * right * weight
        out[k] = out[k] + term if k in out else term
    return {k: p for k, p in out.items() if p}


def moyal_cochain(u: Poly, v: Poly, k: int) -> Poly:
    """c_k with u * v = sum_k nu^k c_k(u, v)."""
    return moyal_terms(u, v).get(k, Poly.zero(u.varset))


def moyal_star(u: Poly, v: Poly) -> Poly:
    total = Poly.zero(u.varset)
    for k, c in moyal_terms(u, v).items():
        total = total + c * Scalar.nu(k)
    return total


def left_star_operator(lam: Poly) -> WeylOperator:
    """D with D(u) = lam * u."""
    varset = lam.varset
    n = varset.half
    deg = _degrees(lam)
    terms: Dict[tuple, Scalar] = {}
    for P, Q in _pairs(deg[:n], deg[n:]):
        k, weight = _weight(P, Q)
        coeff = lam.diff_multi(tuple(P) + tuple(Q))
        beta = tuple(Q) + tuple(P)
        scale = Scalar.nu(k) * weight
        for alpha, c in coeff.items():
            key = (alpha, beta)
            terms[key] = terms[key] + c * scale if key in terms else c * scale
    return WeylOperator(varset, terms)


def right_star_operator(lam: Poly) -> WeylOperator:
    """D with D(u) = u * lam."""
    varset = lam.varset
    n = varset.half
    deg = _degrees(lam)
    terms: Dict[tuple, Scalar] = {}
    for P, Q in _pairs(deg[n:], deg[:n]):
        k, weight = _weight(P, Q)
        coeff = lam.diff_multi(tuple(Q) + tuple(P))
        beta = tuple(P) + tuple(Q)
        scale = Scalar.nu(k) * weight
        for alpha, c in coeff.items():
            key = (alpha, beta)
            terms[key] = terms[key] + c * scale if key in terms else c * scale
    return WeylOperator(varset, terms)
