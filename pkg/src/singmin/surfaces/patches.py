"""Built-in surface patches with analytic jets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import DegenerateMetricError, ParameterError
from .jets import Jet2Vec3

UNIT_TOL = 1e-9

_ZERO3 = np.zeros(3)


def as_vec(v, name: str = "vector") -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ParameterError(f"{name} must be a 3-vector, got shape {arr.shape}")
    return arr


def unit_vec(v, name: str = "direction") -> np.ndarray:
    arr = as_vec(v, name)
    n = np.linalg.norm(arr)
    if abs(n - 1.0) > UNIT_TOL:
        raise ParameterError(f"{name} must be a unit vector (|{name}| = {n:.12g})")
    return arr / n


def perp_unit(a: np.ndarray) -> np.ndarray:
    """Deterministic unit vector orthogonal to a."""
    basis = np.eye(3)
    idx = int(np.argmin(np.abs(basis @ a)))
    e = basis[idx] - (basis[idx] @ a) * a
    return e / np.linalg.norm(e)


@dataclass(frozen=True)
class SurfacePatch:
    """A named parametric patch over a rectangle, producing exact jets.

    The evaluator must describe an immersion on its domain; degenerate points
    raise when the metric is formed.
    """

    name: str
    u_range: tuple[float, float]
    v_range: tuple[float, float]
    evaluator: Callable[[float, float], Jet2Vec3]
    metadata: dict = field(default_factory=dict)

    def jet(self, u: float, v: float) -> Jet2Vec3:
        jet = self.evaluator(u, v)
        du, dv = jet.du, jet.dv
        cross = np.cross(du, dv)
        n2 = float(cross @ cross)
        ee = float(du @ du) + float(dv @ dv)
        if n2 <= 1e-14 * ee * ee:
            raise DegenerateMetricError(
                f"patch {self.name!r} is not immersed at (u, v) = ({u:.6g}, {v:.6g})"
            )
        return jet

    def position(self, u: float, v: float) -> np.ndarray:
        return self.evaluator(u, v).value

    def contains(self, u: float, v: float) -> bool:
        return (
            self.u_range[0] <= u <= self.u_range[1]
            and self.v_range[0] <= v <= self.v_range[1]
        )


def swap_parameters(patch: SurfacePatch) -> SurfacePatch:
    """The same surface with (u, v) exchanged; flips the chart orientation."""

    def ev(u: float, v: float) -> Jet2Vec3:
        jet = patch.evaluator(v, u)
        return Jet2Vec3(
            value=jet.value,
            du=jet.dv,
            dv=jet.du,
            duu=jet.dvv,
            duv=jet.duv,
            dvv=jet.duu,
        )

    return SurfacePatch(
        name=patch.name + "-swapped",
        u_range=patch.v_range,
        v_range=patch.u_range,
        evaluator=ev,
        metadata=dict(patch.metadata),
    )


def plane_patch(
    a=(0.0, 0.0, 1.0),
    u_range: tuple[float, float] = (0.5, 1.5),
    v_range: tuple[float, float] = (-1.0, 1.0),
) -> SurfacePatch:
    """Plane containing the direction a: Phi(u, v) = u*a + v*e with e _|_ a.

    The height over the singular plane is the u coordinate, so the default
    domain stays inside the open halfspace.
    """
    a = unit_vec(a, "a")
    e = perp_unit(a)
    if u_range[0] <= 0:
        raise ParameterError("plane patch u_range must stay at positive height")

    def ev(u: float, v: float) -> Jet2Vec3:
        return Jet2Vec3(
            value=u * a + v * e,
            du=a.copy(),
            dv=e.copy(),
            duu=_ZERO3.copy(),
            duv=_ZERO3.copy(),
            dvv=_ZERO3.copy(),
        )

    return SurfacePatch(
        name="plane",
        u_range=u_range,
        v_range=v_range,
        evaluator=ev,
        metadata={"kind": "plane", "a": tuple(a)},
    )


def sphere_patch(
    r: float = 1.0,
    center=(0.0, 0.0, 0.0),
    lat_range: tuple[float, float] = (0.1, 1.45),
    lon_range: tuple[float, float] = (0.0, 2.0 * np.pi),
) -> SurfacePatch:
    """Sphere chart by latitude u (from the equator toward +z) and longitude v.

    The default latitude band covers the upper hemisphere while staying clear
    of the pole (where the chart degenerates) and of the equator.
    """
    if r <= 0:
        raise ParameterError(f"sphere radius must be positive, got {r}")
    center = as_vec(center, "center")

    def ev(u: float, v: float) -> Jet2Vec3:
        cu, su = np.cos(u), np.sin(u)
        cv, sv = np.cos(v), np.sin(v)
        radial = np.array([cu * cv, cu * sv, su])
        d_u = np.array([-su * cv, -su * sv, cu])
        d_v = np.array([-cu * sv, cu * cv, 0.0])
        d_uv = np.array([su * sv, -su * cv, 0.0])
        d_vv = np.array([-cu * cv, -cu * sv, 0.0])
        return Jet2Vec3(
            value=center + r * radial,
            du=r * d_u,
            dv=r * d_v,
            duu=-r * radial,
            duv=r * d_uv,
            dvv=r * d_vv,
        )

    return SurfacePatch(
        name="sphere",
        u_range=lat_range,
        v_range=lon_range,
        evaluator=ev,
        metadata={"kind": "sphere", "r": r, "center": tuple(center)},
    )


def cylinder_patch(
    r: float = 1.0,
    axis=(1.0, 0.0, 0.0),
    center=(0.0, 0.0, 0.0),
    angle_range: tuple[float, float] = (0.1, np.pi - 0.1),
    height_range: tuple[float, float] = (-1.0, 1.0),
    up=(0.0, 0.0, 1.0),
) -> SurfacePatch:
    """Circular cylinder chart by angle u (measured from the plane orthogonal
    to ``up``) and axial coordinate v."""
    if r <= 0:
        raise ParameterError(f"cylinder radius must be positive, got {r}")
    axis = unit_vec(axis, "axis")
    center = as_vec(center, "center")
    up = as_vec(up, "up")
    n2 = up - (up @ axis) * axis
    norm = np.linalg.norm(n2)
    if norm < 1e-12:
        raise ParameterError("up direction is parallel to the cylinder axis")
    n2 = n2 / norm
    n1 = np.cross(n2, axis)

    def ev(u: float, v: float) -> Jet2Vec3:
        cu, su = np.cos(u), np.sin(u)
        radial = cu * n1 + su * n2
        d_ang = -su * n1 + cu * n2
        return Jet2Vec3(
            value=center + r * radial + v * axis,
            du=r * d_ang,
            dv=axis.copy(),
            duu=-r * radial,
            duv=_ZERO3.copy(),
            dvv=_ZERO3.copy(),
        )

    return SurfacePatch(
        name="cylinder",
        u_range=angle_range,
        v_range=height_range,
        evaluator=ev,
        metadata={"kind": "cylinder", "r": r, "axis": tuple(axis), "center": tuple(center)},
    )


def builtin_patch(kind: str, **params) -> SurfacePatch:
    """Factory over the built-in patches; ``extrusion`` wraps a generating
    trajectory produced by the catenary integrator."""
    if kind == "plane":
        return plane_patch(**params)
    if kind == "sphere":
        return sphere_patch(**params)
    if kind == "cylinder":
        return cylinder_patch(**params)
    if kind == "extrusion":
        from ..catenary.extrude import to_extrusion

        return to_extrusion(**params)
    raise ParameterError(f"unknown patch kind {kind!r}")
