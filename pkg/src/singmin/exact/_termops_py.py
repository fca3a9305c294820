"""Pure-Python term-dict kernels.

A polynomial is carried as ``dict[tuple[int, ...], coeff]`` mapping dense
exponent tuples to nonzero ``int``/``Fraction`` coefficients.  These functions
are the hot inner loops of the exact engine; ``_termops_cy`` is the compiled
twin with the same signatures and semantics.
"""
from __future__ import annotations

BACKEND_NAME = "python"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent-wise difference, or None when not divisible."""
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def grlex_key(m):
    return (sum(m), m)


def lead_monomial(terms):
    """Largest monomial in graded-lex order; terms must be nonempty."""
    best = None
    best_key = None
    for m in terms:
        k = (sum(m), m)
        if best_key is None or k > best_key:
            best_key = k
            best = m
    return best


def add_terms(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def sub_terms(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def neg_terms(a):
    return {m: -c for m, c in a.items()}


def scale_terms(a, s):
    if not s:
        return {}
    return {m: c * s for m, c in a.items()}


def mul_terms(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(key)
            if v is None:
                out[key] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out


def submul_shifted(r, cq, mq, b):
    """r - cq * x^mq * b, used by the exact-division loop."""
    out = dict(r)
    for m, c in b.items():
        key = tuple(x + y for x, y in zip(m, mq))
        v = out.get(key)
        if v is None:
            out[key] = -cq * c
        else:
            v = v - cq * c
            if v:
                out[key] = v
            else:
                del out[key]
    return out
