"""Numeric differential geometry of parametric surface patches."""
from .export import GRID_CSV_COLUMNS, grid_csv, grid_json, obj_mesh
from .fd import fd_jet_oracle, jet_deviation
from .jets import (
    CurvatureSample,
    FundamentalForms,
    Jet2Vec3,
    curvature_sample,
    fundamental_forms,
    shape_data,
)
from .patches import (
    SurfacePatch,
    builtin_patch,
    cylinder_patch,
    plane_patch,
    sphere_patch,
    swap_parameters,
)
from .residual import (
    RESIDUAL_TOL_ANALYTIC,
    RESIDUAL_TOL_ODE,
    GridReport,
    GridSample,
    default_residual_tol,
    grid_report,
    smr_residual,
)

__all__ = [
    "CurvatureSample",
    "FundamentalForms",
    "GRID_CSV_COLUMNS",
    "GridReport",
    "GridSample",
    "Jet2Vec3",
    "RESIDUAL_TOL_ANALYTIC",
    "RESIDUAL_TOL_ODE",
    "SurfacePatch",
    "builtin_patch",
    "curvature_sample",
    "cylinder_patch",
    "default_residual_tol",
    "fd_jet_oracle",
    "fundamental_forms",
    "grid_csv",
    "grid_json",
    "grid_report",
    "jet_deviation",
    "obj_mesh",
    "plane_patch",
    "shape_data",
    "smr_residual",
    "sphere_patch",
    "swap_parameters",
]
