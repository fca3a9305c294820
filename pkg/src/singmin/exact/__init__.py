"""Exact arithmetic: rationals, multivariate polynomials, rational functions."""
from .errors import (
    AlgebraError,
    DegenerateSystemError,
    ExprDivisionByZero,
    NonlinearEquationError,
    ParseError,
    StrayMonomialError,
    SubstitutionDomainError,
)
from .poly import Monomial, Polynomial, content, divides, exact_div, poly_gcd, primitive
from .ratexpr import (
    RationalExpr,
    collect_quadratic,
    partial,
    ring_ops,
    solve_2x2,
    solve_linear,
    substitute,
)
from .symbols import NAME_TO_VAR, NVARS, VAR_NAMES, Var
from .termops import BACKEND
from .textio import parse, render, render_poly

__all__ = [
    "AlgebraError",
    "BACKEND",
    "DegenerateSystemError",
    "ExprDivisionByZero",
    "Monomial",
    "NAME_TO_VAR",
    "NVARS",
    "NonlinearEquationError",
    "ParseError",
    "Polynomial",
    "RationalExpr",
    "StrayMonomialError",
    "SubstitutionDomainError",
    "VAR_NAMES",
    "Var",
    "collect_quadratic",
    "content",
    "divides",
    "exact_div",
    "parse",
    "partial",
    "poly_gcd",
    "primitive",
    "render",
    "render_poly",
    "ring_ops",
    "solve_2x2",
    "solve_linear",
    "substitute",
]
