"""Generating-curve integrator in tangent-angle form.

The planar generating curve of a cylindrical example satisfies, in arc
length, ``x' = cos(theta)``, ``y' = sin(theta)``,
``theta' = alpha * cos(theta) / y`` with y the height over the singular
plane.  The tangent-angle form keeps unit speed exact and survives vertical
tangents, which the negative-alpha branches reach.

``J = y^alpha * cos(theta)`` is conserved along exact solutions (differentiate
and substitute the system: the two terms cancel), so its drift measures the
integrator error directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ParameterError, SingularBoundaryError

TERM_SMAX = "reached-smax"
TERM_YMIN = "hit-y-min"


@dataclass(frozen=True)
class CatenaryState:
    """Arc length, position, and tangent angle of the generating curve."""

    s: float
    x: float
    y: float
    theta: float


@dataclass(frozen=True)
class CatenaryParams:
    alpha: float
    step: float = 1e-3
    smax: float = 10.0
    y_min: float = 1e-3

    def __post_init__(self):
        if self.alpha == 0.0:
            raise ParameterError("alpha = 0 is excluded (plain minimal case)")
        if self.step <= 0.0:
            raise ParameterError(f"step must be positive, got {self.step}")
        if self.smax <= 0.0:
            raise ParameterError(f"smax must be positive, got {self.smax}")
        if self.y_min <= 0.0:
            raise ParameterError(f"y_min must be positive, got {self.y_min}")


@dataclass(frozen=True)
class Trajectory:
    """Integration output; states strictly increasing in s with uniform gaps."""

    alpha: float
    states: tuple[CatenaryState, ...]
    step: float
    termination: str

    @property
    def s_range(self) -> tuple[float, float]:
        return (self.states[0].s, self.states[-1].s)


def rhs(state: CatenaryState, alpha: float) -> tuple[float, float, float]:
    """(x', y', theta') of the tangent-angle system."""
    if state.y <= 0.0:
        raise SingularBoundaryError(f"curve reached the singular plane (y = {state.y:.6g})")
    c = math.cos(state.theta)
    return (c, math.sin(state.theta), alpha * c / state.y)


def first_integral(state: CatenaryState, alpha: float) -> float:
    if state.y <= 0.0:
        raise SingularBoundaryError(f"first integral needs y > 0, got {state.y:.6g}")
    return state.y ** alpha * math.cos(state.theta)


def _f(x: float, y: float, theta: float, alpha: float) -> tuple[float, float, float]:
    if y <= 0.0:
        raise SingularBoundaryError(f"integration stage hit y = {y:.6g}")
    c = math.cos(theta)
    return (c, math.sin(theta), alpha * c / y)


def _rk4(x: float, y: float, th: float, h: float, alpha: float) -> tuple[float, float, float]:
    k1 = _f(x, y, th, alpha)
    k2 = _f(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1], th + 0.5 * h * k1[2], alpha)
    k3 = _f(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1], th + 0.5 * h * k2[2], alpha)
    k4 = _f(x + h * k3[0], y + h * k3[1], th + h * k3[2], alpha)
    return (
        x + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        th + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
    )


def _march(init: CatenaryState, params: CatenaryParams, sign: float):
    """Fixed-step march in one direction; returns (states, hit_y_min)."""
    n_steps = int(math.floor(params.smax / params.step + 1e-12))
    out: list[CatenaryState] = []
    x, y, th = init.x, init.y, init.theta
    for i in range(1, n_steps + 1):
        try:
            x1, y1, th1 = _rk4(x, y, th, sign * params.step, params.alpha)
        except SingularBoundaryError:
            return out, True
        if y1 < params.y_min:
            return out, True
        x, y, th = x1, y1, th1
        out.append(CatenaryState(s=init.s + sign * i * params.step, x=x, y=y, theta=th))
    return out, False


def integrate(init: CatenaryState, params: CatenaryParams) -> Trajectory:
    """Classical RK4 in both directions from ``init`` up to +-smax.

    Stops one step early whenever the next state would drop below ``y_min``
    and records the cutoff; deterministic for fixed inputs.
    """
    if init.y <= params.y_min:
        raise ParameterError(
            f"initial height {init.y:.6g} must exceed y_min = {params.y_min:.6g}"
        )
    fwd, hit_f = _march(init, params, +1.0)
    bwd, hit_b = _march(init, params, -1.0)
    states = tuple(reversed(bwd)) + (init,) + tuple(fwd)
    return Trajectory(
        alpha=params.alpha,
        states=states,
        step=params.step,
        termination=TERM_YMIN if (hit_f or hit_b) else TERM_SMAX,
    )
