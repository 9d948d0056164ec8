"""The lie suite: structural identities of the KKT algebra, checked exactly on the basis."""
from __future__ import annotations

import logging
import time
from typing import List, Optional, Tuple

import numpy as np

from jordan_star.exactnum.matrices import arrays_equal, is_zero_array, rational_identity, rational_rank, trace
from jordan_star.kkt.graded import GradedLieAlgebra, bracket
from jordan_star.kkt.killing import compare_killing_forms
from jordan_star.kkt.symplectic import SymplecticChartBasis, omega_coords, spur, symplectic_basis
from jordan_star.utils.report import SuiteReport

logger = logging.getLogger(__name__)


def _first_nonzero_entry(arr: np.ndarray):
    for idx in np.ndindex(arr.shape):
        if arr[idx]:
            return idx, arr[idx]
    return None, None


def _combine(g: GradedLieAlgebra, coords: np.ndarray) -> np.ndarray:
    out = None
    for k in range(g.dim):
        if coords[k]:
            term = g.ad[k] * coords[k]
            out = term if out is None else out + term
    return out if out is not None else g.ad[0] * 0


def jacobi_failures(g: GradedLieAlgebra, limit: int = 1) -> List[Tuple[Tuple[int, int, int], object]]:
    """Triples (i, j, k) where ad[X_i, X_j] X_k differs from [ad X_i, ad X_j] X_k."""
    failures = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = _combine(g, g.structure[i, j, :])
            rhs = g.ad[i] @ g.ad[j] - g.ad[j] @ g.ad[i]
            idx, value = _first_nonzero_entry(lhs - rhs)
            if idx is not None:
                failures.append(((i, j, idx[1]), value))
                if len(failures) >= limit:
                    return failures
    return failures


def measured_grading_sign(g: GradedLieAlgebra) -> Optional[int]:
    """eps with ad(E) = eps * j on g_j, or None if ad(E) is not of that shape."""
    adE = g.ad_matrix(g.E)
    for eps in (1, -1):
        expected = np.diag([eps * g.degree(i) for i in range(g.dim)]).astype(object)
        if is_zero_array(adE - expected):
            return eps
    return None


def verify_lie_structure(g: GradedLieAlgebra, basis: Optional[SymplecticChartBasis] = None) -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport(suite="lie")
    n, dim = g.n, g.dim
    report.record("dim_g", dim)

    expected = g.jordan.lie_dimension
    report.add(
        "dimension",
        expected is None or expected == dim,
        residual=None if expected in (None, dim) else f"dim g = {dim}, table row says {expected}",
        detail=f"n = {n}, dim g_0 = {g.d0}",
    )

    # table agrees with the closed bracket formula
    elements = [g.basis_element(i) for i in range(dim)]
    eye_g = rational_identity(dim)
    mismatch = None
    for i in range(dim):
        for j in range(i + 1, dim):
            formula = g.coords(bracket(elements[i], elements[j]))
            if not arrays_equal(formula, g.structure[i, j, :]):
                mismatch = (i, j)
                break
        if mismatch:
            break
    report.add("bracket_table_matches_formula", mismatch is None, mismatch)

    failures = jacobi_failures(g)
    report.add(
        "jacobi",
        not failures,
        failures[0][0] if failures else None,
        failures[0][1] if failures else None,
    )

    bad = next(
        ((i, j, k) for i, j, k, _ in g._sparse if g.degree(k) != g.degree(i) + g.degree(j)),
        None,
    )
    report.add("grading", bad is None, bad, detail="[g_i, g_j] in g_(i+j)")

    eps = measured_grading_sign(g)
    report.add("grading_element", eps is not None, detail="ad(E) = eps * j on g_j")
    report.record("grading_sign", eps)

    # theta: involution, automorphism, swaps g_i and g_-i
    th = g.theta_matrix
    report.add("theta_involution", arrays_equal(th @ th, rational_identity(dim)))
    bad = None
    for i in range(dim):
        if not arrays_equal(th @ g.ad[i] @ th, _combine(g, th[:, i])):
            bad = i
            break
    report.add("theta_automorphism", bad is None, [bad] if bad is not None else None)
    swaps = all(
        not th[k, i] or g.degree(k) == -g.degree(i) for i in range(dim) for k in range(dim)
    )
    report.add("theta_grading", swaps)

    # base point: ad(o) = c on l
    c = g.c
    bad = next(
        (a for a in g.g_minus if not arrays_equal(g.bracket_coords(g.o, eye_g[a]), eye_g[a] * c)),
        None,
    )
    report.add("base_point_eigenvalue", bad is None, [bad] if bad is not None else None)
    report.record("c", c)
    beta_oo = g.killing_coords(g.o, g.o)
    report.record("beta_oo", beta_oo)

    # Lagrangian splitting q = l + l'
    iso_bad = None
    for block in (g.g_minus, g.g_plus):
        for i in block:
            for j in block:
                x, y = eye_g[i], eye_g[j]
                if any(g.bracket_coords(x, y)) or g.killing[i, j] or omega_coords(g, x, y):
                    iso_bad = (i, j)
                    break
            if iso_bad:
                break
        if iso_bad:
            break
    report.add("isotropic_l_lp", iso_bad is None, iso_bad, detail="[l,l]=[l',l']=0, beta and Omega vanish")

    # Killing form
    K = g.killing
    report.add("killing_symmetric", arrays_equal(K, K.T))
    bad = next((i for i in range(dim) if not arrays_equal(g.ad[i].T @ K + K @ g.ad[i], K * 0)), None)
    report.add("killing_invariance", bad is None, [bad] if bad is not None else None)
    rank = rational_rank(K)
    report.add("killing_nondegenerate", rank == dim, residual=None if rank == dim else f"rank {rank} < {dim}")

    normalization, kappa = compare_killing_forms(g)
    report.add("killing_closed_form_proportional", kappa is not None)
    report.record("kappa_g", kappa)
    report.record("beta_o_normalization", normalization)

    # identifications x box y = -1/2 [x, theta y] and {x,y,z} = -1/2 [[x, theta y], z]
    A = g.jordan
    eye = [A.basis_element(a).coords for a in range(n)]
    bad2 = bad3 = None
    for a in range(n):
        for b in range(n):
            inner = g.bracket_coords(eye_g[a], g.theta_coords(eye_g[b]))
            h = g.from_coords(inner)
            if not arrays_equal(A.box_matrix(eye[a], eye[b]) * -2, h.T) and bad2 is None:
                bad2 = (a, b)
            for c_idx in range(n):
                outer = g.from_coords(g.bracket_coords(inner, eye_g[c_idx]))
                if not arrays_equal(A.triple(eye[a], eye[b], eye[c_idx]) * -2, outer.u) and bad3 is None:
                    bad3 = (a, b, c_idx)
    report.add("identification_box", bad2 is None, bad2, detail="x box y = -1/2 [x, theta y]")
    report.add("identification_triple", bad3 is None, bad3, detail="{x,y,z} = -1/2 [[x, theta y], z]")

    # symplectic basis and spur
    if basis is None:
        basis = symplectic_basis(g)
    report.add("symplectic_pairing", basis.is_symplectic(), detail="Omega(L_a, L'_b) = delta_ab")
    spur_E = spur(g.E, basis)
    report.add("spur_grading_element", spur_E == n, residual=None if spur_E == n else spur_E)
    bad = None
    for k, i in enumerate(g.g_zero):
        if spur(eye_g[i], basis) != trace(g.g0_basis[k]):
            bad = [i]
            break
        for j in g.g_zero:
            if spur(g.bracket_coords(eye_g[i], eye_g[j]), basis):
                bad = [i, j]
                break
        if bad:
            break
    report.add("spur_is_trace", bad is None, bad, detail="spur(T) = tr T, spur([h, h']) = 0")

    report.seconds = time.perf_counter() - start
    logger.info("lie suite on %r: %s in %.2fs", g, "pass" if report.passed else "FAIL", report.seconds)
    return report

