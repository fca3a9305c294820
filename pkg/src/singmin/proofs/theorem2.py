"""Replay of the constant-principal-curvature classification argument.

Hypotheses: the second principal curvature is a nonzero constant c and the
first, k1, is not constant.  The frame system pins the tangential components,
the two expressions of e2(mu) resolve e2(e2(k1)), and inserting that into the
Gauss identity leaves a single relation in u2^2.  At alpha = -2 the relation
collapses to an explicit quadratic; otherwise u2^2 is solved, differentiated
once more along e2, and compared back, forcing a quadratic with constant
coefficients.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from ..exact import RationalExpr, Var, collect_quadratic, solve_linear
from ..exact.errors import AlgebraError
from .context import (
    OP_E1,
    OP_E2,
    DerivationContext,
    MissingRuleError,
    apply_derivation,
    gauss_curvature_expr,
)
from .report import ChainAborted, ProofReport, Recorder

AL = RationalExpr.variable(Var.ALPHA)
C = RationalExpr.variable(Var.C)
K = RationalExpr.variable(Var.K1)
U1 = RationalExpr.variable(Var.U1)
U2 = RationalExpr.variable(Var.U2)
W = RationalExpr.variable(Var.W)
G = RationalExpr.variable(Var.G)
M = RationalExpr.variable(Var.M)
D22 = RationalExpr.variable(Var.D22)


@dataclass(frozen=True)
class Targets:
    gamma: RationalExpr
    mu: RationalExpr
    e2_mu_differentiated: RationalExpr
    e22: RationalExpr
    gauss_display: RationalExpr
    reduced_identity: RationalExpr
    branch_minus2: RationalExpr
    u2sq: RationalExpr
    u2sq_derivative: RationalExpr
    final_polynomial: RationalExpr


def targets() -> Targets:
    a, c, k = AL, C, K
    bc = (a + 1) * c + k

    gamma = -U1 * W / (c + (1 + a) * k)
    mu = -U2 * W / bc

    e2_mu_differentiated = -W / bc * D22 + 2 * W / bc ** 2 * U2 ** 2
    e22 = bc * (2 * U2 ** 2 / bc ** 2 - c * (c + k) / a)
    gauss_display = D22 / (k - c) - 2 * U2 ** 2 / (k - c) ** 2

    reduced_identity = (
        (c - k) * (a * (c ** 2 + k ** 2) + (c + k) ** 2) / a
        - 2 * (a + 2) * U2 ** 2 / bc
    )
    branch_minus2 = (c + k) ** 2 - 2 * (c ** 2 + k ** 2)

    u2sq = (
        (c - k) * bc * ((a + 1) * c ** 2 + 2 * c * k + (a + 1) * k ** 2)
        / (2 * a * (a + 2))
    )
    u2sq_derivative = (
        (-(a ** 2) + a + 2) * c ** 3
        + 2 * (a - 1) * a * c ** 2 * k
        - 3 * (a ** 2 + a + 2) * c * k ** 2
        - 4 * (a + 1) * k ** 3
    ) / (2 * a * (a + 2))
    final_polynomial = -(a - 1) * k ** 2 + 2 * (a + 1) * c * k + (a + 1) * c ** 2

    return Targets(
        gamma=gamma,
        mu=mu,
        e2_mu_differentiated=e2_mu_differentiated,
        e22=e22,
        gauss_display=gauss_display,
        reduced_identity=reduced_identity,
        branch_minus2=branch_minus2,
        u2sq=u2sq,
        u2sq_derivative=u2sq_derivative,
        final_polynomial=final_polynomial,
    )


def _registry() -> tuple:
    polys = [AL, C, K, K - C, C + (AL + 1) * K, K + (AL + 1) * C, AL + 2]
    return tuple(p.num for p in polys)


def build_context(flip_rule: tuple[str, Var] | None = None) -> DerivationContext:
    a, c, k = AL, C, K
    tg = targets()
    rules = {
        (OP_E1, Var.K1): U1,
        (OP_E2, Var.K1): U2,
        (OP_E1, Var.W): tg.gamma,
        (OP_E2, Var.W): tg.mu,
        (OP_E2, Var.U2): D22,
    }
    if flip_rule is not None and flip_rule in rules:
        rules[flip_rule] = -rules[flip_rule]
    return DerivationContext(
        name="constant-principal-curvature",
        generators=(Var.K1, Var.U1, Var.U2, Var.W),
        rules=rules,
        defined={
            "kappa2": c,
            "mean_curvature": k + c,
            "normal_height": (k + c) * W / a,
            "omega_e1": U2 / (k - c),
            "omega_e2": RationalExpr.zero(),
        },
        nonvanishing=_registry(),
    )


def run_theorem2(flip_rule: tuple[str, Var] | None = None) -> ProofReport:
    t0 = time.perf_counter()
    rec = Recorder(registry=_registry())
    try:
        _chain(rec, flip_rule)
    except ChainAborted:
        pass
    except (AlgebraError, MissingRuleError) as exc:
        rec.error("chain-error", f"{type(exc).__name__}: {exc}")
    return ProofReport(
        theorem="theorem-2-constant-principal-curvature",
        checkpoints=rec.checkpoints,
        wall_time=time.perf_counter() - t0,
    )


def _chain(rec: Recorder, flip_rule) -> None:
    ctx = build_context(flip_rule)
    tg = targets()
    nh = ctx.defined["normal_height"]
    kappa2 = ctx.defined["kappa2"]

    # tangential components from the height-flux equations
    ctx_unknown = ctx.with_rules({(OP_E1, Var.W): G, (OP_E2, Var.W): M})
    rec.exact_equal(
        "gamma-closed-form",
        solve_linear(apply_derivation(nh, OP_E1, ctx_unknown) + G * K, Var.G),
        tg.gamma,
    )
    rec.exact_equal(
        "mu-closed-form",
        solve_linear(apply_derivation(nh, OP_E2, ctx_unknown) + M * kappa2, Var.M),
        tg.mu,
    )

    # e2(mu) two ways: differentiating the closed form vs the frame system
    e2_mu = apply_derivation(tg.mu, OP_E2, ctx)
    rec.exact_equal("mu-gradient-e2", e2_mu, tg.e2_mu_differentiated)
    frame_value = C * W * (C + K) / AL
    sol_e22 = solve_linear(e2_mu - frame_value, Var.D22)
    rec.exact_equal("second-derivative-e2e2", sol_e22, tg.e22)

    # Gauss identity with the unresolved second derivative
    bb_raw = gauss_curvature_expr(ctx)
    rec.exact_equal("gauss-identity-display", bb_raw, tg.gauss_display)

    ctx = ctx.with_rules(
        {(OP_E2, Var.U2): -sol_e22 if flip_rule == (OP_E2, Var.U2) else sol_e22}
    )

    # insert the resolved second derivative; one relation in u2^2 remains
    reduced = gauss_curvature_expr(ctx) - C * K
    rec.nonzero_factor("reduced-gauss-identity", reduced, tg.reduced_identity)

    # branch alpha = -2: the relation collapses to an explicit quadratic
    minus2 = reduced.substitute({Var.ALPHA: RationalExpr.from_number(-2)})
    rec.nonzero_factor("branch-alpha-minus-2", minus2, tg.branch_minus2)

    # generic branch: solve for u2^2
    _, qb, qr = collect_quadratic(reduced)
    u2sq = solve_linear(qb * U2 + qr, Var.U2)
    rec.exact_equal("gradient-sq-e2", u2sq, tg.u2sq)

    # differentiate along e2 (then simplified by u2), and compare with the
    # resolved second derivative evaluated on the solved square
    rec.exact_equal(
        "gradient-sq-derivative", tg.u2sq.partial(Var.K1), tg.u2sq_derivative
    )
    ea, eb, er = collect_quadratic(sol_e22)
    rec.exact_zero("second-derivative-u1-free", ea)
    frame_e22 = eb * tg.u2sq + er
    final = tg.u2sq.partial(Var.K1) / 2 - frame_e22
    rec.nonzero_factor("final-curvature-polynomial", final, tg.final_polynomial)
