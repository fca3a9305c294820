"""Second-order jets and curvature of parametric surface patches.

Convention used throughout: the mean curvature H is the SUM of the principal
curvatures, not their average.  Most geometry libraries divide by two; every
identity this package checks assumes the sum, so H here is twice the usual
"mean" value.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import CurvatureConsistencyError, DegenerateMetricError

METRIC_DEGENERACY_REL = 1e-14
UMBILIC_CLAMP = -1e-10


@dataclass(frozen=True)
class Jet2Vec3:
    """Position and the first/second partials of an immersion at one point.

    ``duv`` is the single mixed partial (smooth patches, symmetric seconds).
    """

    value: np.ndarray
    du: np.ndarray
    dv: np.ndarray
    duu: np.ndarray
    duv: np.ndarray
    dvv: np.ndarray


@dataclass(frozen=True)
class FundamentalForms:
    """First and second fundamental form coefficients plus the unit normal."""

    point: np.ndarray
    normal: np.ndarray
    E: float
    F: float
    G: float
    L: float
    M: float
    N: float


@dataclass(frozen=True)
class CurvatureSample:
    """Curvatures at a surface point; k1 >= k2 and H = k1 + k2 (sum)."""

    point: np.ndarray
    normal: np.ndarray
    E: float
    F: float
    G: float
    L: float
    M: float
    N: float
    H: float
    K: float
    k1: float
    k2: float


def fundamental_forms(jet: Jet2Vec3) -> FundamentalForms:
    du, dv = jet.du, jet.dv
    E = float(du @ du)
    F = float(du @ dv)
    G = float(dv @ dv)
    det = E * G - F * F
    if det <= METRIC_DEGENERACY_REL * (E + G) ** 2:
        raise DegenerateMetricError(
            f"metric determinant {det:.3e} is degenerate (E+G={E + G:.3e})"
        )
    cross = np.cross(du, dv)
    normal = cross / np.linalg.norm(cross)
    return FundamentalForms(
        point=jet.value,
        normal=normal,
        E=E,
        F=F,
        G=G,
        L=float(jet.duu @ normal),
        M=float(jet.duv @ normal),
        N=float(jet.dvv @ normal),
    )


def shape_data(forms: FundamentalForms) -> CurvatureSample:
    """Curvatures from the fundamental forms; clamps the tiny negative
    discriminants produced by umbilic points."""
    det = forms.E * forms.G - forms.F * forms.F
    K = (forms.L * forms.N - forms.M * forms.M) / det
    H = (forms.G * forms.L - 2.0 * forms.F * forms.M + forms.E * forms.N) / det
    disc = H * H - 4.0 * K
    scale = max(H * H, abs(4.0 * K), 1.0)
    if disc < UMBILIC_CLAMP * scale:
        raise CurvatureConsistencyError(
            f"H^2-4K = {disc:.3e} is negative beyond tolerance"
        )
    root = float(np.sqrt(max(disc, 0.0)))
    k1 = 0.5 * (H + root)
    k2 = 0.5 * (H - root)
    return CurvatureSample(
        point=forms.point,
        normal=forms.normal,
        E=forms.E,
        F=forms.F,
        G=forms.G,
        L=forms.L,
        M=forms.M,
        N=forms.N,
        H=H,
        K=K,
        k1=k1,
        k2=k2,
    )


def curvature_sample(jet: Jet2Vec3) -> CurvatureSample:
    return shape_data(fundamental_forms(jet))
