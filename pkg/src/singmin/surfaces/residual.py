"""Residual of the defining curvature identity on grids.

The residual is reported in the polynomial form ``H*<Phi,a> - alpha*<N,a>``
(not divided by the height), which keeps it finite near the singular plane
and makes its absolute value invariant under flipping the chart orientation.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import HalfspaceViolation
from .jets import CurvatureSample, curvature_sample
from .patches import SurfacePatch, unit_vec

#: default pass thresholds for max |residual|
RESIDUAL_TOL_ANALYTIC = 1e-9
RESIDUAL_TOL_ODE = 1e-6


def default_residual_tol(patch: SurfacePatch) -> float:
    if patch.metadata.get("kind") == "extrusion":
        return RESIDUAL_TOL_ODE
    return RESIDUAL_TOL_ANALYTIC


def smr_residual(sample: CurvatureSample, pos, alpha: float, a) -> float:
    """H*<pos,a> - alpha*<N,a>; requires the point strictly above the plane."""
    a = unit_vec(a, "a")
    pos = np.asarray(pos, dtype=float)
    height = float(pos @ a)
    if height <= 0.0:
        raise HalfspaceViolation(f"<pos, a> = {height:.6g} is not positive")
    return sample.H * height - alpha * float(sample.normal @ a)


@dataclass(frozen=True)
class GridSample:
    u: float
    v: float
    point: np.ndarray
    H: float
    K: float
    k1: float
    k2: float
    residual: float


@dataclass(frozen=True)
class GridReport:
    patch: str
    alpha: float
    direction: tuple[float, float, float]
    nu: int
    nv: int
    max_abs_residual: float
    mean_abs_residual: float
    min_K: float
    max_K: float
    min_H: float
    max_H: float
    halfspace_violations: int
    samples: tuple[GridSample, ...] = field(repr=False, default=())

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "patch": self.patch,
            "alpha": self.alpha,
            "direction": list(self.direction),
            "grid": [self.nu, self.nv],
            "max_abs_residual": self.max_abs_residual,
            "mean_abs_residual": self.mean_abs_residual,
            "min_K": self.min_K,
            "max_K": self.max_K,
            "min_H": self.min_H,
            "max_H": self.max_H,
            "halfspace_violations": self.halfspace_violations,
            "valid_samples": len(self.samples),
        }


def grid_report(
    patch: SurfacePatch, alpha: float, a, nu: int, nv: int
) -> GridReport:
    """Evaluate the residual on a uniform (nu x nv) grid over the domain.

    Samples outside the halfspace are skipped and counted; statistics cover
    valid samples only.  Deterministic row-major traversal.
    """
    if nu < 2 or nv < 2:
        raise HalfspaceViolation(f"grid dimensions must be >= 2, got {nu}x{nv}")
    a = unit_vec(a, "a")
    us = np.linspace(patch.u_range[0], patch.u_range[1], nu)
    vs = np.linspace(patch.v_range[0], patch.v_range[1], nv)
    rows: list[GridSample] = []
    violations = 0
    for u in us:
        for v in vs:
            jet = patch.jet(float(u), float(v))
            height = float(jet.value @ a)
            if height <= 0.0:
                violations += 1
                continue
            sample = curvature_sample(jet)
            res = sample.H * height - alpha * float(sample.normal @ a)
            rows.append(
                GridSample(
                    u=float(u),
                    v=float(v),
                    point=jet.value,
                    H=sample.H,
                    K=sample.K,
                    k1=sample.k1,
                    k2=sample.k2,
                    residual=res,
                )
            )
    if not rows:
        raise HalfspaceViolation(
            f"all {nu * nv} grid samples violate the halfspace assumption"
        )
    abs_res = np.array([abs(r.residual) for r in rows])
    ks = np.array([r.K for r in rows])
    hs = np.array([r.H for r in rows])
    return GridReport(
        patch=patch.name,
        alpha=float(alpha),
        direction=tuple(float(x) for x in a),
        nu=nu,
        nv=nv,
        max_abs_residual=float(abs_res.max()),
        mean_abs_residual=float(abs_res.mean()),
        min_K=float(ks.min()),
        max_K=float(ks.max()),
        min_H=float(hs.min()),
        max_H=float(hs.max()),
        halfspace_violations=violations,
        samples=tuple(rows),
    )
