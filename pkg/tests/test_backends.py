"""Agreement between the compiled kernel and the pure-Python twin."""
import random

import pytest

from singmin.exact import _termops_py as py
from singmin.exact.symbols import NVARS

cy = pytest.importorskip(
    "singmin.exact._termops_cy", reason="compiled kernel not built"
)


def rand_terms(rng, n_terms=8, max_deg=4, bound=50):
    t = {}
    for _ in range(rng.randint(0, n_terms)):
        m = tuple(rng.randint(0, max_deg) if i < 5 else 0 for i in range(NVARS))
        c = rng.randint(-bound, bound)
        if c:
            t[m] = c
    return t


@pytest.fixture(scope="module")
def cases():
    rng = random.Random(20240809)
    return [(rand_terms(rng), rand_terms(rng)) for _ in range(200)]


def test_backends_report_distinct_names():
    assert py.BACKEND_NAME == "python"
    assert cy.BACKEND_NAME == "cython"


def test_add_sub_mul_agree(cases):
    for a, b in cases:
        assert py.add_terms(a, b) == cy.add_terms(a, b)
        assert py.sub_terms(a, b) == cy.sub_terms(a, b)
        assert py.mul_terms(a, b) == cy.mul_terms(a, b)


def test_unary_and_scale_agree(cases):
    for a, _ in cases:
        assert py.neg_terms(a) == cy.neg_terms(a)
        for s in (0, 3, -7):
            assert py.scale_terms(a, s) == cy.scale_terms(a, s)


def test_lead_and_mono_ops_agree(cases):
    for a, b in cases:
        if a:
            assert py.lead_monomial(a) == cy.lead_monomial(a)
        for ma in list(a)[:3]:
            for mb in list(b)[:3]:
                assert py.mono_mul(ma, mb) == cy.mono_mul(ma, mb)
                assert py.mono_div(ma, mb) == cy.mono_div(ma, mb)
                assert py.grlex_key(ma) == cy.grlex_key(ma)


def test_submul_shifted_agree(cases):
    zero = (0,) * NVARS
    for a, b in cases:
        if not b:
            continue
        mq = list(b)[0]
        assert py.submul_shifted(a, 3, mq, b) == cy.submul_shifted(a, 3, mq, b)
        assert py.submul_shifted(a, 1, zero, b) == cy.submul_shifted(a, 1, zero, b)
