# cython: language_level=3
"""Compiled term-dict kernels; semantics identical to ``_termops_py``.

Coefficients stay generic Python objects (int / Fraction) so exactness is
untouched; the speedup comes from C-level tuple and dict handling in the
inner loops.
"""

BACKEND_NAME = "cython"


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <object> a[i] + <object> b[i]
    return tuple(out)


def mono_mul(tuple a, tuple b):
    return _tuple_add(a, b)


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef object d
    for i in range(n):
        d = <object> a[i] - <object> b[i]
        if d < 0:
            return None
        out[i] = d
    return tuple(out)


def grlex_key(tuple m):
    cdef object s = 0
    cdef Py_ssize_t i, n = len(m)
    for i in range(n):
        s = s + <object> m[i]
    return (s, m)


def lead_monomial(dict terms):
    cdef tuple best = None
    cdef tuple m
    cdef object best_key = None, k
    for m in terms:
        k = grlex_key(m)
        if best_key is None or k > best_key:
            best_key = k
            best = m
    return best


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple m
    cdef object c, s
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


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple m
    cdef object c, s
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


def neg_terms(dict a):
    cdef dict out = {}
    cdef tuple m
    cdef object c
    for m, c in a.items():
        out[m] = -c
    return out


def scale_terms(dict a, object s):
    cdef dict out = {}
    cdef tuple m
    cdef object c
    if not s:
        return out
    for m, c in a.items():
        out[m] = c * s
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, key
    cdef object ca, cb, v
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = _tuple_add(ma, mb)
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


def submul_shifted(dict r, object cq, tuple mq, dict b):
    cdef dict out = dict(r)
    cdef tuple m, key
    cdef object c, v
    for m, c in b.items():
        key = _tuple_add(m, mq)
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
