"""Generating-curve integration: closed forms, invariants, cutoffs."""
import math

import pytest

from singmin.catenary import (
    TERM_SMAX,
    TERM_YMIN,
    CatenaryParams,
    CatenaryState,
    first_integral,
    integrate,
    rhs,
    trajectory_csv,
)
from singmin.errors import ParameterError, SingularBoundaryError


class TestVectorField:
    def test_vertical_line_is_straight_for_every_alpha(self):
        state = CatenaryState(s=0.0, x=0.0, y=1.0, theta=math.pi / 2)
        for alpha in (-3.0, -1.0, 1.0, 5.5):
            dx, dy, dth = rhs(state, alpha)
            assert abs(dth) < 1e-15
            assert dy == pytest.approx(1.0)

    def test_catenary_vertex_curvature(self):
        dx, dy, dth = rhs(CatenaryState(0.0, 0.0, 1.0, 0.0), 1.0)
        assert (dx, dy, dth) == (1.0, 0.0, 1.0)

    def test_circle_vertex_curvature(self):
        _, _, dth = rhs(CatenaryState(0.0, 0.0, 1.0, 0.0), -1.0)
        assert dth == -1.0

    def test_singular_boundary(self):
        with pytest.raises(SingularBoundaryError):
            rhs(CatenaryState(0.0, 0.0, 0.0, 0.0), 1.0)


class TestParams:
    def test_alpha_zero_rejected(self):
        with pytest.raises(ParameterError):
            CatenaryParams(alpha=0.0)

    @pytest.mark.parametrize("kw", [dict(step=0.0), dict(smax=-1.0), dict(y_min=0.0)])
    def test_invalid_fields_rejected(self, kw):
        with pytest.raises(ParameterError):
            CatenaryParams(alpha=1.0, **kw)

    def test_initial_height_must_clear_cutoff(self):
        with pytest.raises(ParameterError):
            integrate(CatenaryState(0, 0, 1e-4, 0), CatenaryParams(alpha=1.0))


class TestClosedForms:
    def test_catenary_matches_cosh(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=1e-3, smax=2.0)
        )
        assert traj.termination == TERM_SMAX
        assert max(abs(st.y - math.cosh(st.x)) for st in traj.states) < 1e-8

    def test_circle_stays_on_circle(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=-1.0, step=1e-3, smax=2.0)
        )
        assert max(abs(st.x ** 2 + st.y ** 2 - 1.0) for st in traj.states) < 1e-8

    def test_first_integral_on_catenary(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=1e-3, smax=2.0)
        )
        assert max(abs(first_integral(st, 1.0) - 1.0) for st in traj.states) < 1e-10

    def test_first_integral_on_circle_away_from_plane(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0),
            CatenaryParams(alpha=-1.0, step=1e-3, smax=2.0, y_min=0.1),
        )
        assert max(abs(first_integral(st, -1.0) - 1.0) for st in traj.states) < 1e-10

    def test_vertical_line_first_integral_vanishes(self):
        traj = integrate(
            CatenaryState(0, 0, 1, math.pi / 2),
            CatenaryParams(alpha=1.0, step=1e-2, smax=1.0),
        )
        assert max(abs(first_integral(st, 1.0)) for st in traj.states) < 1e-12


class TestIntegratorStructure:
    def test_states_uniformly_spaced(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=1e-2, smax=0.5)
        )
        ss = [st.s for st in traj.states]
        assert ss == sorted(ss)
        gaps = [b - a for a, b in zip(ss, ss[1:])]
        assert all(abs(g - 1e-2) < 1e-12 for g in gaps)
        assert len(traj.states) == 101

    def test_cutoff_at_y_min(self):
        traj = integrate(
            CatenaryState(0, 0, 0.2, 0),
            CatenaryParams(alpha=-2.0, step=1e-3, smax=2.0, y_min=0.1),
        )
        assert traj.termination == TERM_YMIN
        assert min(st.y for st in traj.states) >= 0.1

    def test_step_halving_fourth_order(self):
        def err(alpha, step, closed):
            traj = integrate(
                CatenaryState(0, 0, 1, 0),
                CatenaryParams(alpha=alpha, step=step, smax=2.0, y_min=0.1),
            )
            return max(abs(closed(st)) for st in traj.states)

        for alpha, closed in (
            (1.0, lambda st: st.y - math.cosh(st.x)),
            (-1.0, lambda st: st.x ** 2 + st.y ** 2 - 1.0),
        ):
            ratio = err(alpha, 0.04, closed) / err(alpha, 0.02, closed)
            assert 12.0 <= ratio <= 20.0

    def test_reflection_symmetry(self):
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=1e-3, smax=1.0)
        )
        mid = len(traj.states) // 2
        assert traj.states[mid].x == 0.0
        for i in range(1, mid + 1):
            fwd, bwd = traj.states[mid + i], traj.states[mid - i]
            assert abs(fwd.x + bwd.x) < 1e-12
            assert abs(fwd.y - bwd.y) < 1e-12
            assert abs(fwd.theta + bwd.theta) < 1e-12

    def test_discrete_curvature_matches_field(self):
        step = 1e-3
        traj = integrate(
            CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=step, smax=0.5)
        )
        sts = traj.states

        def circum_kappa(p0, p1, p2):
            ax, ay = p1[0] - p0[0], p1[1] - p0[1]
            bx, by = p2[0] - p1[0], p2[1] - p1[1]
            cx, cy = p2[0] - p0[0], p2[1] - p0[1]
            area2 = abs(ax * cy - cx * ay)
            la = math.hypot(ax, ay)
            lb = math.hypot(bx, by)
            lc = math.hypot(cx, cy)
            return 2.0 * area2 / (la * lb * lc)

        worst = max(
            abs(
                circum_kappa(
                    (sts[i - 1].x, sts[i - 1].y),
                    (sts[i].x, sts[i].y),
                    (sts[i + 1].x, sts[i + 1].y),
                )
                - abs(math.cos(sts[i].theta) / sts[i].y)
            )
            for i in range(1, len(sts) - 1)
        )
        assert worst < 10.0 * step ** 2


def test_csv_has_first_integral_column():
    traj = integrate(
        CatenaryState(0, 0, 1, 0), CatenaryParams(alpha=1.0, step=1e-2, smax=0.1)
    )
    text = trajectory_csv(traj)
    header, first = text.splitlines()[:2]
    assert header == "s,x,y,theta,J"
    assert len(first.split(",")) == 5
