"""Residual of the defining identity on the built-in patch catalog."""
import numpy as np
import pytest

from singmin.errors import HalfspaceViolation, ParameterError
from singmin.surfaces import (
    builtin_patch,
    curvature_sample,
    cylinder_patch,
    grid_report,
    plane_patch,
    smr_residual,
    sphere_patch,
    swap_parameters,
)

A = (0.0, 0.0, 1.0)


@pytest.mark.parametrize("alpha", [-2.0, -1.0, 1.0, 3.7])
def test_plane_is_exact_for_every_alpha(alpha):
    rep = grid_report(plane_patch(), alpha, A, 50, 50)
    assert rep.max_abs_residual < 1e-12


def test_sphere_only_at_alpha_minus_two():
    patch = sphere_patch(r=1.0)
    good = grid_report(patch, -2.0, A, 50, 50)
    assert good.max_abs_residual < 1e-9
    bad = grid_report(patch, -1.0, A, 50, 50)
    assert bad.max_abs_residual > 0.5


def test_cylinder_only_at_alpha_minus_one():
    patch = cylinder_patch(r=1.0)
    good = grid_report(patch, -1.0, A, 50, 50)
    assert good.max_abs_residual < 1e-9
    assert abs(good.min_K) < 1e-12 and abs(good.max_K) < 1e-12
    bad = grid_report(patch, 1.0, A, 50, 50)
    assert bad.max_abs_residual >= 1.0


def test_sphere_residual_matches_closed_form():
    # residual = (2 + alpha) * <radial, a> for the unit sphere about the origin
    patch = sphere_patch(r=1.0)
    u, v = 0.8, 0.3
    s = curvature_sample(patch.jet(u, v))
    res = smr_residual(s, s.point, -1.0, A)
    assert res == pytest.approx((2.0 - 1.0) * np.sin(u), rel=1e-12)


def test_orientation_flip_invariance():
    for patch in (plane_patch(), sphere_patch(r=1.3), cylinder_patch(r=0.7)):
        swapped = swap_parameters(patch)
        u = 0.5 * (patch.u_range[0] + patch.u_range[1])
        v = 0.5 * (patch.v_range[0] + patch.v_range[1])
        s1 = curvature_sample(patch.jet(u, v))
        s2 = curvature_sample(swapped.jet(v, u))
        assert s2.K == pytest.approx(s1.K, rel=1e-12, abs=1e-12)
        assert s2.H == pytest.approx(-s1.H, rel=1e-12, abs=1e-12)
        r1 = smr_residual(s1, s1.point, 0.7, A)
        r2 = smr_residual(s2, s2.point, 0.7, A)
        assert abs(r1) == pytest.approx(abs(r2), rel=1e-12, abs=1e-14)
        assert r1 == pytest.approx(-r2, rel=1e-12, abs=1e-14)


def test_halfspace_violation_raises():
    patch = sphere_patch(r=1.0)
    s = curvature_sample(patch.jet(0.5, 0.5))
    with pytest.raises(HalfspaceViolation):
        smr_residual(s, s.point, -2.0, (0.0, 0.0, -1.0))


def test_grid_counts_violations():
    # direction tilted so part of the sphere band drops below the plane
    patch = sphere_patch(r=1.0, lat_range=(0.05, 1.45))
    rep = grid_report(patch, -2.0, (1.0, 0.0, 0.0), 30, 30)
    assert rep.halfspace_violations > 0
    assert rep.max_abs_residual < 1e-9  # spheres are exact at alpha = -2


def test_grid_all_invalid_raises():
    patch = sphere_patch(r=1.0)
    with pytest.raises(HalfspaceViolation):
        grid_report(patch, -2.0, (0.0, 0.0, -1.0), 10, 10)


def test_grid_dims_validated():
    with pytest.raises(HalfspaceViolation):
        grid_report(sphere_patch(), -2.0, A, 1, 10)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        sphere_patch(r=-1.0)
    with pytest.raises(ParameterError):
        cylinder_patch(r=0.0)
    with pytest.raises(ParameterError):
        plane_patch(a=(0.0, 0.0, 2.0))
    with pytest.raises(ParameterError):
        cylinder_patch(axis=(1.0, 1.0, 0.0))
    with pytest.raises(ParameterError):
        builtin_patch("torus")
    with pytest.raises(ParameterError):
        plane_patch(u_range=(-0.5, 1.0))


def test_report_dict_schema():
    rep = grid_report(plane_patch(), 1.0, A, 5, 5)
    doc = rep.to_dict()
    assert doc["schema_version"] == 1
    assert doc["grid"] == [5, 5]
    assert set(doc) >= {
        "patch", "alpha", "direction", "max_abs_residual", "mean_abs_residual",
        "min_K", "max_K", "min_H", "max_H", "halfspace_violations",
    }
