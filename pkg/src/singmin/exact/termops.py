"""Kernel backend selection.

Imports the compiled term-arithmetic kernel when available and falls back to
the pure-Python twin otherwise.  Set ``SINGMIN_PURE_PYTHON=1`` to force the
fallback (used by the backend-comparison benchmark and tests).
"""
from __future__ import annotations

import os

if os.environ.get("SINGMIN_PURE_PYTHON"):
    from . import _termops_py as _impl
else:
    try:
        from . import _termops_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _termops_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND_NAME

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
grlex_key = _impl.grlex_key
lead_monomial = _impl.lead_monomial
add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
neg_terms = _impl.neg_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
submul_shifted = _impl.submul_shifted
