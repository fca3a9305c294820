"""Serialization of grid reports and meshes.

All floats are written with 17 significant digits so outputs are
byte-deterministic for fixed inputs.
"""
from __future__ import annotations

import json

import numpy as np

from .patches import SurfacePatch
from .residual import GridReport

GRID_CSV_COLUMNS = ("u", "v", "x", "y", "z", "H", "K", "k1", "k2", "residual")


def fmt(x: float) -> str:
    return f"{float(x):.17g}"


def grid_csv(report: GridReport) -> str:
    lines = [",".join(GRID_CSV_COLUMNS)]
    for s in report.samples:
        lines.append(
            ",".join(
                fmt(x)
                for x in (
                    s.u,
                    s.v,
                    s.point[0],
                    s.point[1],
                    s.point[2],
                    s.H,
                    s.K,
                    s.k1,
                    s.k2,
                    s.residual,
                )
            )
        )
    return "\n".join(lines) + "\n"


def grid_json(report: GridReport) -> str:
    doc = report.to_dict()
    doc_fmt = {k: (fmt(v) if isinstance(v, float) else v) for k, v in doc.items()}
    return json.dumps(doc_fmt, indent=2, sort_keys=True) + "\n"


def obj_mesh(patch: SurfacePatch, nu: int, nv: int) -> str:
    """Wavefront OBJ of a (nu x nv) sample grid.

    Vertices in grid-major order (u rows, then v); each quad is split along
    the same diagonal into two triangles.
    """
    us = np.linspace(patch.u_range[0], patch.u_range[1], nu)
    vs = np.linspace(patch.v_range[0], patch.v_range[1], nv)
    lines = [f"# {patch.name} {nu}x{nv}"]
    for u in us:
        for v in vs:
            p = patch.position(float(u), float(v))
            lines.append(f"v {fmt(p[0])} {fmt(p[1])} {fmt(p[2])}")

    def vid(i: int, j: int) -> int:
        return i * nv + j + 1

    for i in range(nu - 1):
        for j in range(nv - 1):
            a = vid(i, j)
            b = vid(i + 1, j)
            c = vid(i + 1, j + 1)
            d = vid(i, j + 1)
            lines.append(f"f {a} {b} {c}")
            lines.append(f"f {a} {c} {d}")
    return "\n".join(lines) + "\n"
