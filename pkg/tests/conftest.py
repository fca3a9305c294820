"""Shared strategies and helpers for the test suite."""
from __future__ import annotations

import hypothesis.strategies as st

from singmin.exact import NVARS, Polynomial, RationalExpr, Var

SMALL_VARS = (Var.ALPHA, Var.C, Var.K1, Var.U1)


@st.composite
def polynomials(draw, variables=SMALL_VARS, max_terms=4, max_degree=3, coeff_bound=9):
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    terms: dict[tuple, int] = {}
    for _ in range(n_terms):
        exps = [0] * NVARS
        for v in variables:
            exps[int(v)] = draw(st.integers(min_value=0, max_value=max_degree))
        c = draw(st.integers(min_value=-coeff_bound, max_value=coeff_bound))
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(terms)


@st.composite
def nonzero_polynomials(draw, **kwargs):
    p = draw(polynomials(**kwargs))
    if p.is_zero():
        return Polynomial.one()
    return p


@st.composite
def rational_exprs(draw, **kwargs):
    num = draw(polynomials(**kwargs))
    den = draw(nonzero_polynomials(**kwargs))
    return RationalExpr(num, den)
