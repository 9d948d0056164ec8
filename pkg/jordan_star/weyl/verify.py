"""The star suite: star-product axioms, associativity, covariance, property (B), rho^L and rho^R."""
from __future__ import annotations

import logging
import random
import time
from typing import List, Optional

from sympy import QQ

from jordan_star.chart.darboux import ChartContext, poisson
from jordan_star.exactnum.scalar import Scalar
from jordan_star.mpoly.poly import Poly, VarSet, random_poly
from jordan_star.utils import config
from jordan_star.utils.report import SuiteReport
from jordan_star.weyl.moyal import left_star_operator, moyal_cochain, moyal_star, right_star_operator
from jordan_star.weyl.operator import WeylOperator, apply, commutator

logger = logging.getLogger(__name__)

HALF_OVER_NU = Scalar.monomial(QQ(1, 2), -1)


def left_operators(ctx: ChartContext) -> List[WeylOperator]:
    return [left_star_operator(lam) for lam in ctx.moment_maps()]


def right_operators(ctx: ChartContext) -> List[WeylOperator]:
    return [right_star_operator(lam) for lam in ctx.moment_maps()]


def _samples(varset: VarSet, rng: random.Random, count: int, max_degree: int = 3) -> List[Poly]:
    return [random_poly(varset, rng, max_degree=max_degree, n_terms=3) for _ in range(count)]


def verify_star_axioms(
    ctx: ChartContext, trials: Optional[int] = None, seed: Optional[int] = None
) -> SuiteReport:
    """Unit, classical limit, first-order commutator and associativity on random inputs."""
    trials = config.ASSOC_TRIALS if trials is None else trials
    rng = random.Random(config.SEED if seed is None else seed)
    report = SuiteReport(suite="star")
    vs = ctx.varset
    one = Poly.constant(vs, 1)
    polys = ctx.moment_maps() + _samples(vs, rng, 6)

    bad = next((k for k, u in enumerate(polys) if moyal_star(u, one) != u or moyal_star(one, u) != u), None)
    report.add("unit", bad is None, [bad] if bad is not None else None, detail="u * 1 = 1 * u = u")

    classical = first_order = None
    for i, u in enumerate(polys):
        for j, v in enumerate(polys):
            if classical is None and moyal_cochain(u, v, 0) != u * v:
                classical = (i, j)
            bracket = poisson(u, v)
            if first_order is None and (
                moyal_cochain(u, v, 1) != bracket
                or (moyal_star(u, v) - moyal_star(v, u)).truncate_nu(2) != bracket * Scalar.nu(1) * 2
            ):
                first_order = (i, j)
    report.add("classical_limit", classical is None, classical, detail="c_0(u, v) = uv")
    report.add("first_order_poisson", first_order is None, first_order, detail="u*v - v*u = 2 nu {u,v} mod nu^2")

    failed = None
    for t in range(trials):
        p, q, r = _samples(vs, rng, 3)
        lhs = moyal_star(moyal_star(p, q), r)
        rhs = moyal_star(p, moyal_star(q, r))
        if lhs != rhs:
            failed = (t, lhs - rhs)
            break
    report.add(
        "associativity",
        failed is None,
        [failed[0]] if failed else None,
        failed[1] if failed else None,
        detail=f"{trials} random degree <= 3 triples",
    )

    bad = None
    for k, lam in enumerate(ctx.moment_maps()):
        left, right = left_star_operator(lam), right_star_operator(lam)
        for u in polys[-3:]:
            if apply(left, u) != moyal_star(lam, u) or apply(right, u) != moyal_star(u, lam):
                bad = k
                break
        if bad is not None:
            break
    report.add("star_operators", bad is None, [bad] if bad is not None else None, detail="L_lam(u) = lam * u")
    return report


def verify_covariance(ctx: ChartContext) -> SuiteReport:
    """lambda_A * lambda_B - lambda_B * lambda_A = 2 nu {lambda_A, lambda_B} = 2 nu lambda_[A,B]."""
    report = SuiteReport(suite="star")
    g = ctx.g
    lam = ctx.moment_maps()
    two_nu = Scalar.nu(1) * 2
    first = high = None
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            comm = moyal_star(lam[i], lam[j]) - moyal_star(lam[j], lam[i])
            residual = comm - poisson(lam[i], lam[j]) * two_nu
            if residual and first is None:
                first = ((i, j), residual)
            if comm.nu_part(3) and high is None:
                high = (i, j)
            if first is None and comm != ctx.moment_of_coords(g.structure[i, j, :]) * two_nu:
                first = ((i, j), comm - ctx.moment_of_coords(g.structure[i, j, :]) * two_nu)
    report.add(
        "covariance",
        first is None,
        first[0] if first else None,
        first[1] if first else None,
        detail="[lambda_A, lambda_B]_* = 2 nu lambda_[A,B]",
    )
    report.add("third_order_cancels", high is None, high, detail="no nu^3 term in the star commutator")
    return report


def verify_property_B(
    ctx: ChartContext,
    left: Optional[List[WeylOperator]] = None,
    right: Optional[List[WeylOperator]] = None,
) -> SuiteReport:
    """N = max deg lambda_A bounds the derivative order of left and right star multiplication."""
    report = SuiteReport(suite="star")
    left = left_operators(ctx) if left is None else left
    right = right_operators(ctx) if right is None else right
    lam = ctx.moment_maps()
    N = max(p.degree() for p in lam)
    bad = next((k for k in range(len(lam)) if left[k].order() > N or right[k].order() > N), None)
    report.add("property_B", bad is None, [bad] if bad is not None else None, detail=f"N = {N}")
    measured = max(max(op.order() for op in left), max(op.order() for op in right))
    report.record("property_b_n", N)
    report.record("property_b_max_order", measured)
    return report


def verify_rho_lr(
    ctx: ChartContext,
    left: Optional[List[WeylOperator]] = None,
    right: Optional[List[WeylOperator]] = None,
) -> SuiteReport:
    """rho^L = (1/2nu) lambda * . is a homomorphism; rho^R = (1/2nu) . * lambda an anti-homomorphism."""
    report = SuiteReport(suite="star")
    g = ctx.g
    rho_l = [op * HALF_OVER_NU for op in (left_operators(ctx) if left is None else left)]
    rho_r = [op * HALF_OVER_NU for op in (right_operators(ctx) if right is None else right)]

    def combine(ops, coords):
        total = WeylOperator.zero(ctx.varset)
        for k, c in enumerate(coords):
            if c:
                total = total + ops[k] * c
        return total

    bad_l = bad_r = None
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            target = g.structure[i, j, :]
            if bad_l is None and commutator(rho_l[i], rho_l[j]) != combine(rho_l, target):
                bad_l = (i, j)
            if bad_r is None and commutator(rho_r[i], rho_r[j]) != -combine(rho_r, target):
                bad_r = (i, j)
    report.add("rho_left_homomorphism", bad_l is None, bad_l)
    report.add("rho_right_antihomomorphism", bad_r is None, bad_r)
    return report


def run_star_suite(ctx: ChartContext, trials: Optional[int] = None, seed: Optional[int] = None) -> SuiteReport:
    start = time.perf_counter()
    report = verify_star_axioms(ctx, trials, seed)
    report.merge(verify_covariance(ctx))
    left, right = left_operators(ctx), right_operators(ctx)
    report.merge(verify_property_B(ctx, left, right))
    report.merge(verify_rho_lr(ctx, left, right))
    report.seconds = time.perf_counter() - start
    logger.info("star suite on %r: %s in %.2fs", ctx.g, "pass" if report.passed else "FAIL", report.seconds)
    return report
