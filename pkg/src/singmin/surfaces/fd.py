"""Finite-difference jet oracle.

Independent cross-check for analytic jets: central differences built from
position evaluations only, second-order accurate in the step.
"""
from __future__ import annotations

from ..errors import ParameterError
from .jets import Jet2Vec3
from .patches import SurfacePatch


def fd_jet_oracle(patch: SurfacePatch, u: float, v: float, h: float) -> Jet2Vec3:
    if h <= 0.0:
        raise ParameterError(f"finite-difference step must be positive, got {h}")
    corners = [(u + du, v + dv) for du in (-h, 0.0, h) for dv in (-h, 0.0, h)]
    for cu, cv in corners:
        if not patch.contains(cu, cv):
            raise ParameterError(
                f"stencil point ({cu:.6g}, {cv:.6g}) is outside the patch domain"
            )
    p = patch.position
    c = p(u, v)
    pu = p(u + h, v)
    mu = p(u - h, v)
    pv = p(u, v + h)
    mv = p(u, v - h)
    pp = p(u + h, v + h)
    pm = p(u + h, v - h)
    mp = p(u - h, v + h)
    mm = p(u - h, v - h)
    return Jet2Vec3(
        value=c,
        du=(pu - mu) / (2.0 * h),
        dv=(pv - mv) / (2.0 * h),
        duu=(pu - 2.0 * c + mu) / (h * h),
        duv=(pp - pm - mp + mm) / (4.0 * h * h),
        dvv=(pv - 2.0 * c + mv) / (h * h),
    )


def jet_deviation(a: Jet2Vec3, b: Jet2Vec3) -> float:
    """Max-norm distance between two jets over all derivative slots."""
    import numpy as np

    return float(
        max(
            np.max(np.abs(a.du - b.du)),
            np.max(np.abs(a.dv - b.dv)),
            np.max(np.abs(a.duu - b.duu)),
            np.max(np.abs(a.duv - b.duv)),
            np.max(np.abs(a.dvv - b.dvv)),
        )
    )
