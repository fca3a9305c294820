"""Replay of the constant-mean-curvature classification argument.

With constant mean curvature h0 the defining identity reads
``h0*w - alpha*<N,a> = 0``.  Differentiating along each principal direction,
using the Weingarten rules ``e_i(<N,a>) = -kappa_i <e_i,a>`` and
``kappa2 = h0 - kappa1``, must produce ``(h0 + alpha*kappa_i) <e_i,a>``.
"""
from __future__ import annotations

import time

from ..exact import RationalExpr, Var
from ..exact.errors import AlgebraError
from .context import (
    OP_E1,
    OP_E2,
    DerivationContext,
    MissingRuleError,
    apply_derivation,
)
from .report import ChainAborted, ProofReport, Recorder

AL = RationalExpr.variable(Var.ALPHA)
K = RationalExpr.variable(Var.K1)
W = RationalExpr.variable(Var.W)
H0 = RationalExpr.variable(Var.H0)
A1 = RationalExpr.variable(Var.A1)
A2 = RationalExpr.variable(Var.A2)
NA = RationalExpr.variable(Var.NA)


def build_context(flip_rule: tuple[str, Var] | None = None) -> DerivationContext:
    kappa2 = H0 - K
    rules = {
        (OP_E1, Var.W): A1,
        (OP_E2, Var.W): A2,
        (OP_E1, Var.NA): -K * A1,
        (OP_E2, Var.NA): -kappa2 * A2,
    }
    if flip_rule is not None and flip_rule in rules:
        rules[flip_rule] = -rules[flip_rule]
    return DerivationContext(
        name="constant-mean-curvature",
        generators=(Var.W, Var.NA, Var.A1, Var.A2, Var.K1),
        rules=rules,
        defined={"kappa2": kappa2},
        constants=frozenset({Var.ALPHA, Var.C, Var.H0}),
    )


def run_theorem3(flip_rule: tuple[str, Var] | None = None) -> ProofReport:
    t0 = time.perf_counter()
    rec = Recorder()
    try:
        ctx = build_context(flip_rule)
        identity = H0 * W - AL * NA
        rec.exact_equal(
            "cmc-gradient-e1",
            apply_derivation(identity, OP_E1, ctx),
            (H0 + AL * K) * A1,
        )
        rec.exact_equal(
            "cmc-gradient-e2",
            apply_derivation(identity, OP_E2, ctx),
            (H0 + AL * (H0 - K)) * A2,
        )
    except ChainAborted:
        pass
    except (AlgebraError, MissingRuleError) as exc:
        rec.error("chain-error", f"{type(exc).__name__}: {exc}")
    return ProofReport(
        theorem="theorem-3-constant-mean-curvature",
        checkpoints=rec.checkpoints,
        wall_time=time.perf_counter() - t0,
    )
