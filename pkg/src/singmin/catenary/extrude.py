"""Extrusion of a generating trajectory into a cylindrical surface patch.

The patch is ``Phi(s, t) = x(s)*e + y(s)*a + t*v`` with the ruling direction
v orthogonal to a and ``e = a x v`` completing the frame.  Jets come from the
tangent-angle vector field evaluated on dense-output states, never from
differentiating the interpolant, so their accuracy matches the integrator's.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from ..surfaces.jets import Jet2Vec3
from ..surfaces.patches import SurfacePatch, unit_vec
from .ode import Trajectory

EXTRUSION_TILT_TOL = 1e-12


def _hermite(p0: float, d0: float, p1: float, d1: float, h: float, t: float) -> float:
    t2 = t * t
    t3 = t2 * t
    return (
        (2.0 * t3 - 3.0 * t2 + 1.0) * p0
        + (t3 - 2.0 * t2 + t) * h * d0
        + (-2.0 * t3 + 3.0 * t2) * p1
        + (t3 - t2) * h * d1
    )


def dense_state(traj: Trajectory, s: float) -> tuple[float, float, float]:
    """Cubic-Hermite (x, y, theta) between stored states, with endpoint slopes
    taken from the vector field."""
    states = traj.states
    s0 = states[0].s
    s1 = states[-1].s
    if not (s0 <= s <= s1):
        raise ParameterError(f"s = {s:.6g} outside trajectory range [{s0:.6g}, {s1:.6g}]")
    h = traj.step
    i = int((s - s0) / h)
    i = min(max(i, 0), len(states) - 2)
    a, b = states[i], states[i + 1]
    t = (s - a.s) / h
    alpha = traj.alpha
    ca, cb = math.cos(a.theta), math.cos(b.theta)
    sa, sb = math.sin(a.theta), math.sin(b.theta)
    x = _hermite(a.x, ca, b.x, cb, h, t)
    y = _hermite(a.y, sa, b.y, sb, h, t)
    th = _hermite(a.theta, alpha * ca / a.y, b.theta, alpha * cb / b.y, h, t)
    return x, y, th


def to_extrusion(
    trajectory: Trajectory,
    v=(0.0, 1.0, 0.0),
    a=(0.0, 0.0, 1.0),
    t_range: tuple[float, float] = (-1.0, 1.0),
) -> SurfacePatch:
    """Cylindrical patch over the trajectory; requires <v, a> = 0."""
    v = unit_vec(v, "v")
    a = unit_vec(a, "a")
    tilt = float(v @ a)
    if abs(tilt) > EXTRUSION_TILT_TOL:
        raise ParameterError(
            f"ruling direction must be orthogonal to a (<v,a> = {tilt:.3e})"
        )
    if len(trajectory.states) < 2:
        raise ParameterError("trajectory must contain at least two states")
    e = np.cross(a, v)
    alpha = trajectory.alpha

    def ev(s: float, t: float) -> Jet2Vec3:
        x, y, th = dense_state(trajectory, s)
        c, sn = math.cos(th), math.sin(th)
        dth = alpha * c / y
        return Jet2Vec3(
            value=x * e + y * a + t * v,
            du=c * e + sn * a,
            dv=v.copy(),
            duu=dth * (-sn * e + c * a),
            duv=np.zeros(3),
            dvv=np.zeros(3),
        )

    return SurfacePatch(
        name="extrusion",
        u_range=trajectory.s_range,
        v_range=t_range,
        evaluator=ev,
        metadata={
            "kind": "extrusion",
            "alpha": alpha,
            "v": tuple(v),
            "a": tuple(a),
            "termination": trajectory.termination,
        },
    )
