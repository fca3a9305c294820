"""Multivariate polynomials over the rationals.

Terms are kept in a dict keyed by dense exponent tuples over the registered
indeterminates; coefficients are exact (``int`` or ``fractions.Fraction``,
never floats).  The monomial order is graded lex with ``Var.ALPHA`` most
significant.  ``poly_gcd`` is a recursive content / primitive-part reduction
with subresultant pseudo-remainder sequences, sized for the handful of
variables and moderate degrees this engine produces.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from . import termops
from .symbols import NVARS, VAR_NAMES, Var

Coeff = Union[int, Fraction]

_ZERO_MONO = (0,) * NVARS


def _norm_coeff(c: Coeff) -> Coeff:
    """Store integral values as int so equal values share one representation."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class Monomial:
    """Exponent vector over the registered indeterminates, graded-lex ordered."""

    __slots__ = ("_e",)

    def __init__(self, exponents: Union[Mapping[Var, int], tuple]):
        if isinstance(exponents, tuple):
            e = exponents
        else:
            vec = [0] * NVARS
            for v, p in exponents.items():
                if p < 0:
                    raise ValueError("negative exponent")
                vec[int(v)] = int(p)
            e = tuple(vec)
        if len(e) != NVARS:
            raise ValueError("exponent tuple has wrong length")
        self._e = e

    @property
    def exponents(self) -> dict[Var, int]:
        """Sparse view; zero exponents are not present."""
        return {Var(i): p for i, p in enumerate(self._e) if p}

    def degree(self) -> int:
        return sum(self._e)

    def as_tuple(self) -> tuple:
        return self._e

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(termops.mono_mul(self._e, other._e))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __lt__(self, other: "Monomial") -> bool:
        return termops.grlex_key(self._e) < termops.grlex_key(other._e)

    def __le__(self, other: "Monomial") -> bool:
        return termops.grlex_key(self._e) <= termops.grlex_key(other._e)

    def __gt__(self, other: "Monomial") -> bool:
        return termops.grlex_key(self._e) > termops.grlex_key(other._e)

    def __ge__(self, other: "Monomial") -> bool:
        return termops.grlex_key(self._e) >= termops.grlex_key(other._e)

    def __repr__(self) -> str:
        parts = [f"{VAR_NAMES[v]}^{p}" for v, p in self.exponents.items()]
        return "Monomial(" + ("*".join(parts) or "1") + ")"


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Optional[Mapping] = None):
        t: dict = {}
        if terms:
            for m, c in terms.items():
                key = m.as_tuple() if isinstance(m, Monomial) else tuple(m)
                c = _norm_coeff(c)
                if c:
                    t[key] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({_ZERO_MONO: 1})

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        c = _norm_coeff(c)
        return cls._raw({_ZERO_MONO: c} if c else {})

    @classmethod
    def variable(cls, v: Var) -> "Polynomial":
        e = [0] * NVARS
        e[int(v)] = 1
        return cls._raw({tuple(e): 1})

    # -- queries ------------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Coeff]:
        """Public view keyed by Monomial; no zero coefficients stored."""
        return {Monomial(m): c for m, c in self._t.items()}

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and _ZERO_MONO in self._t)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return Fraction(self._t.get(_ZERO_MONO, 0))

    def is_one(self) -> bool:
        return self._t.get(_ZERO_MONO) == 1 and len(self._t) == 1

    def __len__(self) -> int:
        return len(self._t)

    def total_degree(self) -> int:
        if not self._t:
            return 0
        return max(sum(m) for m in self._t)

    def degree_in(self, v: Var) -> int:
        i = int(v)
        if not self._t:
            return 0
        return max(m[i] for m in self._t)

    def variables(self) -> tuple[Var, ...]:
        present = [False] * NVARS
        for m in self._t:
            for i, e in enumerate(m):
                if e:
                    present[i] = True
        return tuple(Var(i) for i in range(NVARS) if present[i])

    def leading_monomial(self) -> Monomial:
        if not self._t:
            raise ValueError("zero polynomial has no leading monomial")
        return Monomial(termops.lead_monomial(self._t))

    def leading_coeff(self) -> Coeff:
        if not self._t:
            return 0
        return self._t[termops.lead_monomial(self._t)]

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(termops.add_terms(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(termops.sub_terms(self._t, other._t))

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(termops.sub_terms(other._t, self._t))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(termops.neg_terms(self._t))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial._raw(scale(self._t, other))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(termops.mul_terms(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        from .textio import render_poly

        return f"Polynomial({render_poly(self)})"

    # -- calculus and structure ----------------------------------------------
    def partial(self, v: Var) -> "Polynomial":
        """Formal partial derivative."""
        i = int(v)
        out: dict = {}
        for m, c in self._t.items():
            e = m[i]
            if not e:
                continue
            key = m[:i] + (e - 1,) + m[i + 1:]
            nc = c * e
            prev = out.get(key)
            out[key] = nc if prev is None else prev + nc
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def coeffs_in(self, v: Var) -> dict[int, "Polynomial"]:
        """Group terms by the exponent of v, with v stripped from the keys."""
        i = int(v)
        groups: dict[int, dict] = {}
        for m, c in self._t.items():
            e = m[i]
            key = m[:i] + (0,) + m[i + 1:]
            groups.setdefault(e, {})[key] = c
        return {e: Polynomial._raw(t) for e, t in groups.items()}

    def eval_rational(self, values: Mapping[Var, Coeff]) -> Fraction:
        """Evaluate at rational points; every occurring variable must be bound."""
        total = Fraction(0)
        for m, c in self._t.items():
            term = Fraction(c)
            for i, e in enumerate(m):
                if e:
                    term *= Fraction(values[Var(i)]) ** e
            total += term
        return total


def _coerce(x) -> Union[Polynomial, type(NotImplemented)]:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.const(x)
    return NotImplemented


def scale(t: dict, s: Coeff) -> dict:
    s = _norm_coeff(s)
    if not s:
        return {}
    return {m: _norm_coeff(c * s) for m, c in t.items()}


# -- content / primitive part -------------------------------------------------

def content(p: Polynomial) -> Fraction:
    """Rational content: p == content(p) * primitive(p); sign follows the
    leading coefficient so the primitive part has a positive one."""
    if p.is_zero():
        return Fraction(0)
    num_gcd = 0
    den_lcm = 1
    for c in p._t.values():
        f = Fraction(c)
        num_gcd = math.gcd(num_gcd, abs(f.numerator))
        den_lcm = den_lcm * f.denominator // math.gcd(den_lcm, f.denominator)
    cont = Fraction(num_gcd, den_lcm)
    if Fraction(p.leading_coeff()) < 0:
        cont = -cont
    return cont


def primitive(p: Polynomial) -> Polynomial:
    """Integer-coefficient primitive part with positive leading coefficient."""
    if p.is_zero():
        return p
    inv = 1 / content(p)
    return Polynomial._raw({m: _norm_coeff(c * inv) for m, c in p._t.items()})


def exact_div(a: Polynomial, b: Polynomial) -> Optional[Polynomial]:
    """Quotient a/b when b divides a in Q[vars], else None."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return Polynomial.zero()
    if b.is_constant():
        inv = 1 / b.constant_value()
        return Polynomial._raw({m: _norm_coeff(c * inv) for m, c in a._t.items()})
    bt = b._t
    lead_b = termops.lead_monomial(bt)
    lc_b = Fraction(bt[lead_b])
    r = dict(a._t)
    q: dict = {}
    while r:
        lead_r = termops.lead_monomial(r)
        mq = termops.mono_div(lead_r, lead_b)
        if mq is None:
            return None
        cq = _norm_coeff(Fraction(r[lead_r]) / lc_b)
        q[mq] = cq
        r = termops.submul_shifted(r, cq, mq, bt)
    return Polynomial._raw(q)


def divides(b: Polynomial, a: Polynomial) -> bool:
    return exact_div(a, b) is not None


# -- multivariate gcd ----------------------------------------------------------

def _mono_content(t: dict) -> tuple:
    it = iter(t)
    mins = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < mins[i]:
                mins[i] = e
    return tuple(mins)


def _deflate(t: dict, m0: tuple) -> dict:
    if not any(m0):
        return t
    return {tuple(x - y for x, y in zip(m, m0)): c for m, c in t.items()}


def _prem(f: dict[int, Polynomial], g: dict[int, Polynomial]) -> dict[int, Polynomial]:
    """Pseudo-remainder of grouped univariate forms: lc(g)^(df-dg+1) f mod g."""
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    e = max(r) - dg + 1
    while r:
        dr = max(r)
        if dr < dg:
            break
        lr = r[dr]
        new: dict[int, Polynomial] = {}
        for d, p in r.items():
            if d != dr:
                new[d] = p * lg
        for d, p in g.items():
            if d == dg:
                continue
            dd = d + dr - dg
            q = new.get(dd, Polynomial.zero()) - p * lr
            if q.is_zero():
                new.pop(dd, None)
            else:
                new[dd] = q
        r = new
        e -= 1
    if e > 0 and r:
        mult = lg ** e
        r = {d: p * mult for d, p in r.items()}
    return r


def _join(groups: dict[int, Polynomial], v: Var) -> Polynomial:
    i = int(v)
    out: dict = {}
    for e, p in groups.items():
        for m, c in p._t.items():
            out[m[:i] + (e,) + m[i + 1:]] = c
    return Polynomial._raw(out)


def _content_in(groups: dict[int, Polynomial]) -> Polynomial:
    cont = Polynomial.zero()
    for p in groups.values():
        cont = poly_gcd(cont, p)
        if cont.is_one():
            break
    return cont


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Z[vars] (integer content included),
    normalized to a positive leading coefficient."""
    if a.is_zero():
        return primitive(b) * _int_content_abs(b)
    if b.is_zero():
        return primitive(a) * _int_content_abs(a)

    ca, pa = _int_split(a)
    cb, pb = _int_split(b)
    cint = math.gcd(ca, cb)

    ma = _mono_content(pa._t)
    mb = _mono_content(pb._t)
    mg = tuple(min(x, y) for x, y in zip(ma, mb))
    pa = Polynomial._raw(_deflate(pa._t, ma))
    pb = Polynomial._raw(_deflate(pb._t, mb))

    g = _gcd_primitive(pa, pb)
    out = g * cint
    if any(mg):
        out = out * Polynomial._raw({mg: 1})
    return out


def _int_content_abs(p: Polynomial) -> int:
    c = content(p)
    return abs(c.numerator) if c.denominator == 1 else 1


def _int_split(p: Polynomial) -> tuple[int, Polynomial]:
    """(integer content, primitive part); requires nonzero p.

    Fractional coefficients are cleared into the primitive part, so gcds of
    rational-coefficient inputs come out defined up to a unit, which is all
    canonicalization needs.
    """
    c = content(p)
    prim = Polynomial._raw({m: _norm_coeff(v / c) for m, v in p._t.items()})
    return (abs(c.numerator) if c.denominator == 1 else 1), prim


def _max_norm(p: Polynomial) -> int:
    return max(abs(int(c)) for c in p._t.values())


def _int_content(p: Polynomial) -> int:
    g = 0
    for c in p._t.values():
        g = math.gcd(g, abs(int(c)))
        if g == 1:
            break
    return g


def _eval_var(p: Polynomial, v: Var, xi: int) -> Polynomial:
    """Substitute the integer xi for v (exact, integer coefficients)."""
    i = int(v)
    out: dict = {}
    for m, c in p._t.items():
        e = m[i]
        key = m[:i] + (0,) + m[i + 1:]
        val = c * (xi ** e) if e else c
        prev = out.get(key)
        cur = val if prev is None else prev + val
        if cur:
            out[key] = cur
        else:
            out.pop(key, None)
    return Polynomial._raw(out)


def _balanced_digit(p: Polynomial, xi: int) -> Polynomial:
    """Coefficient-wise balanced remainder mod xi, in (-xi/2, xi/2]."""
    half = xi // 2
    out: dict = {}
    for m, c in p._t.items():
        r = int(c) % xi
        if r > half:
            r -= xi
        if r:
            out[m] = r
    return Polynomial._raw(out)


def _shift_var(p: Polynomial, v: Var, e: int) -> Polynomial:
    if e == 0:
        return p
    i = int(v)
    return Polynomial._raw({m[:i] + (e,) + m[i + 1:]: c for m, c in p._t.items()})


def _gcdheu(f: Polynomial, g: Polynomial, depth: int = 0) -> Optional[Polynomial]:
    """Heuristic gcd by evaluation at a large integer, with reconstruction by
    balanced digits and a verification divide; None when the heuristic fails.

    Integer content is split off exactly at every level (evaluation can only
    overestimate it), and each reconstructed primitive candidate is checked by
    exact trial division, so a returned value is always correct; the
    subresultant path below stays as the fallback.
    """
    if f._t == g._t:
        return f
    if f.is_constant() and g.is_constant():
        return Polynomial.const(math.gcd(int(f.constant_value()), int(g.constant_value())))
    if f.is_constant():
        return Polynomial.const(math.gcd(int(f.constant_value()), _int_content(g)))
    if g.is_constant():
        return Polynomial.const(math.gcd(int(g.constant_value()), _int_content(f)))

    cf = _int_content(f)
    cg = _int_content(g)
    c = math.gcd(cf, cg)
    if cf > 1:
        f = exact_div(f, Polynomial.const(cf))
    if cg > 1:
        g = exact_div(g, Polynomial.const(cg))

    common = [v for v in f.variables() if g.degree_in(v) > 0]
    if not common:
        return Polynomial.const(c)
    if depth > 8:
        return None
    v = common[0]
    xi = 2 * min(_max_norm(f), _max_norm(g)) + 29
    for attempt in range(6):
        fe = _eval_var(f, v, xi)
        ge = _eval_var(g, v, xi)
        if not (fe.is_zero() or ge.is_zero()):
            gamma = _gcdheu(fe, ge, depth + 1)
            if gamma is not None:
                h = Polynomial.zero()
                rest = gamma
                power = 0
                while not rest.is_zero() and power <= f.degree_in(v) + g.degree_in(v):
                    digit = _balanced_digit(rest, xi)
                    if not digit.is_zero():
                        h = h + _shift_var(digit, v, power)
                    rest = exact_div(rest - digit, Polynomial.const(xi))
                    power += 1
                if rest.is_zero() and not h.is_zero():
                    cand = primitive(h)
                    if _divides_int(f, cand) and _divides_int(g, cand):
                        return cand * c
        xi = xi * 73794 // 27011 + attempt + 1
    return None


def _divides_int(a: Polynomial, b: Polynomial) -> bool:
    """True when b divides a with an integer-coefficient quotient."""
    q = exact_div(a, b)
    return q is not None and all(isinstance(c, int) for c in q._t.values())


def _gcd_primitive(f: Polynomial, g: Polynomial) -> Polynomial:
    """gcd of integer-primitive polynomials, primitive positive result."""
    if f._t == g._t:
        return f
    if f.is_constant() or g.is_constant():
        return Polynomial.one()

    fv = f.variables()
    gv = g.variables()
    common = [v for v in fv if v in gv]
    if not common:
        return Polynomial.one()

    heur = _gcdheu(f, g)
    if heur is not None:
        return primitive(heur)

    v = common[0]

    fg = f.coeffs_in(v)
    gg = g.coeffs_in(v)
    cont_f = _content_in(fg)
    cont_g = _content_in(gg)
    cont = _gcd_primitive(primitive(cont_f), primitive(cont_g)) if not (
        cont_f.is_constant() or cont_g.is_constant()
    ) else Polynomial.one()

    pf = {e: _exact(p, cont_f) for e, p in fg.items()}
    pg = {e: _exact(p, cont_g) for e, p in gg.items()}

    if max(pf) < max(pg):
        pf, pg = pg, pf

    gg1 = Polynomial.one()
    h = Polynomial.one()
    A, B = pf, pg
    while True:
        da, db = max(A), max(B)
        delta = da - db
        R = _prem(A, B)
        if not R:
            result = B
            break
        if max(R) == 0:
            result = None
            break
        divisor = gg1 * (h ** delta)
        A = B
        B = {d: _exact(p, divisor) for d, p in R.items()}
        gg1 = A[max(A)]
        if delta == 1:
            h = gg1
        elif delta > 1:
            h = _exact(gg1 ** delta, h ** (delta - 1))

    if result is None:
        core = Polynomial.one()
    else:
        joined = _join(result, v)
        rc = _content_in(joined.coeffs_in(v))
        core = primitive(_exact(joined, rc))
    return primitive(core * cont)


def _exact(a: Polynomial, b: Polynomial) -> Polynomial:
    q = exact_div(a, b)
    if q is None:
        raise ArithmeticError("internal gcd division was not exact")
    return q
