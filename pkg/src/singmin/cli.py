"""Command-line entry point.

Subcommands: ``prove`` (run the exact checkpoint chains), ``residual``
(defining-identity residual on a grid), ``curvature`` (per-sample curvature
table plus finite-difference cross-check), ``catenary`` (integrate a
generating curve), ``extrude`` (build and export a cylindrical surface).

Exit codes: 0 success / all checks pass, 1 assertion failure, 2 usage or
parameter error.  Outputs are byte-deterministic for fixed inputs.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catenary import (
    CatenaryParams,
    CatenaryState,
    integrate,
    to_extrusion,
    trajectory_csv,
    trajectory_json,
)
from .errors import ParameterError
from .proofs import THEOREMS, reports_to_json, run_all
from .surfaces import (
    GRID_CSV_COLUMNS,
    builtin_patch,
    curvature_sample,
    default_residual_tol,
    fd_jet_oracle,
    grid_csv,
    grid_json,
    grid_report,
    jet_deviation,
    obj_mesh,
)
from .surfaces.export import fmt

PATCH_KINDS = ("plane", "sphere", "cylinder")


def _vec(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z — got {text!r}")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo,hi — got {text!r}")
    return (float(parts[0]), float(parts[1]))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singmin",
        description="Exact proof replay and numeric lab for "
        "alpha-singular minimal surfaces.",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="key = value file supplying defaults; flags override",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="run the exact checkpoint chains")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--json", type=Path, default=None, help="write the report document here")

    def patch_flags(q: argparse.ArgumentParser) -> None:
        q.add_argument("--patch", choices=PATCH_KINDS, default="sphere")
        q.add_argument("--r", type=float, default=1.0, help="radius")
        q.add_argument("--center", type=_vec, default=(0.0, 0.0, 0.0))
        q.add_argument("--axis", type=_vec, default=(1.0, 0.0, 0.0), help="cylinder axis")
        q.add_argument("--a", type=_vec, default=(0.0, 0.0, 1.0), help="reference direction")
        q.add_argument("--nu", type=int, default=50)
        q.add_argument("--nv", type=int, default=50)
        q.add_argument("--out", type=Path, default=Path("grid"), help="output path prefix")

    q = sub.add_parser("residual", help="defining-identity residual on a grid")
    patch_flags(q)
    q.add_argument("--alpha", type=float, default=None)
    q.add_argument("--expect-pass", action="store_true",
                   help="exit 1 unless max |residual| is below the threshold")
    q.add_argument("--threshold", type=float, default=None,
                   help="override the per-patch default pass threshold")

    q = sub.add_parser("curvature", help="curvature table and FD cross-check")
    patch_flags(q)
    q.add_argument("--fd-h", type=float, default=1e-3, help="finite-difference step")

    q = sub.add_parser("catenary", help="integrate a generating curve")
    q.add_argument("--alpha", type=float, default=None)
    q.add_argument("--y0", type=float, default=1.0)
    q.add_argument("--x0", type=float, default=0.0)
    q.add_argument("--theta0", type=float, default=0.0)
    q.add_argument("--step", type=float, default=1e-3)
    q.add_argument("--smax", type=float, default=10.0)
    q.add_argument("--ymin", type=float, default=1e-3)
    q.add_argument("--out", type=Path, default=Path("trajectory"))

    q = sub.add_parser("extrude", help="extrude a generating curve to a surface")
    q.add_argument("--alpha", type=float, default=None)
    q.add_argument("--traj", type=Path, default=None,
                   help="polyline JSON from the catenary command instead of "
                        "inline integration")
    q.add_argument("--y0", type=float, default=1.0)
    q.add_argument("--x0", type=float, default=0.0)
    q.add_argument("--theta0", type=float, default=0.0)
    q.add_argument("--step", type=float, default=1e-3)
    q.add_argument("--smax", type=float, default=2.0)
    q.add_argument("--ymin", type=float, default=1e-3)
    q.add_argument("--v", type=_vec, default=(0.0, 1.0, 0.0), help="ruling direction")
    q.add_argument("--a", type=_vec, default=(0.0, 0.0, 1.0), help="reference direction")
    q.add_argument("--t-range", type=_pair, default=(-1.0, 1.0))
    q.add_argument("--nu", type=int, default=50)
    q.add_argument("--nv", type=int, default=10)
    q.add_argument("--out", type=Path, default=Path("extrusion"))

    return parser


def _load_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Apply a key = value config file as parser defaults; flags override.

    Unknown keys are rejected (exit 2 via ParameterError).
    """
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", type=Path, default=None)
    known, _ = probe.parse_known_args(argv)
    if known.config is None:
        return argv
    path = known.config
    if not path.exists():
        raise ParameterError(f"config file {path} does not exist")
    valid = set()
    for action_parser in parser._subparsers._group_actions[0].choices.values():  # type: ignore[union-attr]
        for action in action_parser._actions:
            valid.add(action.dest)
    overrides: dict[str, str] = {}
    for line_no, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{line_no}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in valid:
            raise ParameterError(f"{path}:{line_no}: unknown key {key!r}")
        overrides[key] = value.strip()
    if overrides:
        for action_parser in parser._subparsers._group_actions[0].choices.values():  # type: ignore[union-attr]
            for action in action_parser._actions:
                if action.dest in overrides and action.type is not None:
                    action_parser.set_defaults(
                        **{action.dest: action.type(overrides[action.dest])}
                    )
    return argv


def _make_patch(args: argparse.Namespace):
    if args.patch == "plane":
        return builtin_patch("plane", a=args.a)
    if args.patch == "sphere":
        return builtin_patch("sphere", r=args.r, center=args.center)
    return builtin_patch("cylinder", r=args.r, axis=args.axis, center=args.center)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_prove(args: argparse.Namespace) -> int:
    if args.theorem is None:
        reports = run_all()
    else:
        reports = [THEOREMS[args.theorem]()]
    for rep in reports:
        print(rep.to_text())
    if args.json is not None:
        _write(args.json, reports_to_json(reports) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_residual(args: argparse.Namespace) -> int:
    patch = _make_patch(args)
    report = grid_report(patch, args.alpha, args.a, args.nu, args.nv)
    _write(args.out.with_suffix(".json"), grid_json(report))
    _write(args.out.with_suffix(".csv"), grid_csv(report))
    threshold = args.threshold if args.threshold is not None else default_residual_tol(patch)
    print(
        f"{patch.name}: alpha={fmt(args.alpha)} max|residual|={fmt(report.max_abs_residual)} "
        f"threshold={fmt(threshold)} violations={report.halfspace_violations}"
    )
    if args.expect_pass and report.max_abs_residual > threshold:
        print("expectation failed: residual above threshold", file=sys.stderr)
        return 1
    return 0


def cmd_curvature(args: argparse.Namespace) -> int:
    patch = _make_patch(args)
    import numpy as np

    us = np.linspace(patch.u_range[0], patch.u_range[1], args.nu)
    vs = np.linspace(patch.v_range[0], patch.v_range[1], args.nv)
    lines = [",".join(("u", "v", "E", "F", "G", "L", "M", "N", "H", "K", "k1", "k2"))]
    max_dev = 0.0
    h = args.fd_h
    for u in us:
        for v in vs:
            s = curvature_sample(patch.jet(float(u), float(v)))
            lines.append(
                ",".join(
                    fmt(x)
                    for x in (u, v, s.E, s.F, s.G, s.L, s.M, s.N, s.H, s.K, s.k1, s.k2)
                )
            )
            if (
                patch.contains(u - h, v - h)
                and patch.contains(u + h, v + h)
                and patch.contains(u + h, v - h)
                and patch.contains(u - h, v + h)
            ):
                dev = jet_deviation(fd_jet_oracle(patch, float(u), float(v), h), patch.jet(float(u), float(v)))
                max_dev = max(max_dev, dev)
    _write(args.out.with_suffix(".csv"), "\n".join(lines) + "\n")
    summary = {
        "schema_version": 1,
        "patch": patch.name,
        "fd_h": fmt(h),
        "fd_max_deviation": fmt(max_dev),
        "grid": [args.nu, args.nv],
    }
    _write(args.out.with_suffix(".json"), json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(f"{patch.name}: fd max deviation {fmt(max_dev)} at h={fmt(h)}")
    return 0


def _integrate_from_args(args: argparse.Namespace):
    params = CatenaryParams(
        alpha=args.alpha, step=args.step, smax=args.smax, y_min=args.ymin
    )
    init = CatenaryState(s=0.0, x=args.x0, y=args.y0, theta=args.theta0)
    return integrate(init, params)


def cmd_catenary(args: argparse.Namespace) -> int:
    traj = _integrate_from_args(args)
    _write(args.out.with_suffix(".csv"), trajectory_csv(traj))
    _write(args.out.with_suffix(".json"), trajectory_json(traj))
    print(
        f"alpha={fmt(args.alpha)}: {len(traj.states)} states, "
        f"s in [{fmt(traj.s_range[0])}, {fmt(traj.s_range[1])}], {traj.termination}"
    )
    return 0


def _load_trajectory(path: Path):
    from .catenary import CatenaryState, Trajectory

    if not path.exists():
        raise ParameterError(f"trajectory file {path} does not exist")
    doc = json.loads(path.read_text())
    states = tuple(
        CatenaryState(s=float(s), x=float(x), y=float(y), theta=float(th))
        for s, x, y, th, _ in doc["points"]
    )
    if len(states) < 2:
        raise ParameterError(f"trajectory file {path} has fewer than two states")
    return Trajectory(
        alpha=float(doc["alpha"]),
        states=states,
        step=float(doc["step"]),
        termination=doc["termination"],
    )


def cmd_extrude(args: argparse.Namespace) -> int:
    if args.traj is not None:
        traj = _load_trajectory(args.traj)
        if args.alpha is None:
            args.alpha = traj.alpha
    else:
        if args.alpha is None:
            raise ParameterError("alpha is required (flag --alpha or config key)")
        traj = _integrate_from_args(args)
    patch = to_extrusion(traj, v=args.v, a=args.a, t_range=args.t_range)
    report = grid_report(patch, args.alpha, args.a, args.nu, args.nv)
    _write(args.out.with_suffix(".obj"), obj_mesh(patch, args.nu, args.nv))
    _write(args.out.with_suffix(".json"), grid_json(report))
    _write(args.out.with_suffix(".csv"), grid_csv(report))
    max_abs_k = max(abs(report.min_K), abs(report.max_K))
    print(
        f"extrusion: alpha={fmt(args.alpha)} max|residual|={fmt(report.max_abs_residual)} "
        f"max|K|={fmt(max_abs_k)} {patch.metadata['termination']}"
    )
    return 0


_COMMANDS = {
    "prove": cmd_prove,
    "residual": cmd_residual,
    "curvature": cmd_curvature,
    "catenary": cmd_catenary,
    "extrude": cmd_extrude,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _load_config(parser, argv)
        args = parser.parse_args(argv)
        if getattr(args, "alpha", 0.0) is None and args.command != "extrude":
            raise ParameterError("alpha is required (flag --alpha or config key)")
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
