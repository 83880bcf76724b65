"""Dense univariate polynomials over a :class:`~rssep.field.FieldCtx`.

Coefficients are canonical field indices, lowest degree first, with no
trailing zeros; the zero polynomial has an empty coefficient tuple and
degree -1 (below every real degree, which is all the comparisons need).
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

from .field import FieldCtx, FieldElement, FieldError, FieldMismatchError


class PolyError(ValueError):
    pass


class NotCoprimeError(PolyError):
    pass


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("ctx", "_c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        self.ctx = ctx
        self._c = _trim([ctx.index(c) for c in coeffs])

    @classmethod
    def _raw(cls, ctx: FieldCtx, coeffs: list[int]) -> "Poly":
        out = cls.__new__(cls)
        out.ctx = ctx
        out._c = _trim(coeffs)
        return out

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls._raw(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, value) -> "Poly":
        return cls._raw(ctx, [ctx.index(value)])

    @classmethod
    def monomial(cls, ctx: FieldCtx, coeff, degree: int) -> "Poly":
        return cls._raw(ctx, [0] * degree + [ctx.index(coeff)])

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.ctx, c) for c in self._c)

    @property
    def raw(self) -> tuple[int, ...]:
        """Coefficients as canonical indices."""
        return self._c

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self._c))

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.ctx!r})"

    def __str__(self):
        return format_poly(self)

    # -- ring arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise FieldMismatchError(f"polynomials over {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return Poly.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, add = self._c, other._c, self.ctx.add
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = add(out[i], bi)
        return Poly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return Poly._raw(self.ctx, [neg(c) for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return Poly._raw(self.ctx, [])
        ctx = self.ctx
        if ctx.s == 1:
            # exact in int64 for p <= 2^16 and degree <= 2^16
            prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % ctx.p
            return Poly._raw(ctx, prod.tolist())
        if len(a) > len(b):
            a, b = b, a
        bv = np.array(b, dtype=np.int64)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, ai in enumerate(a):
            if ai:
                seg = out[i : i + len(b)]
                out[i : i + len(b)] = ctx.vadd(seg, ctx.vmul(ai, bv))
        return Poly._raw(ctx, out.tolist())

    __rmul__ = __mul__

    def scale(self, k) -> "Poly":
        k = self.ctx.index(k)
        mul = self.ctx.mul
        return Poly._raw(self.ctx, [mul(c, k) for c in self._c])

    def monic(self) -> "Poly":
        if not self._c:
            return self
        return self.scale(FieldElement(self.ctx, self.ctx.inv(self.lead)))

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = self.ctx
        add, mul, neg = ctx.add, ctx.mul, ctx.neg
        rem = list(self._c)
        db = other.degree
        inv_lead = ctx.inv(other.lead)
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            t = mul(rem[shift + db], inv_lead)
            if t == 0:
                continue
            quot[shift] = t
            nt = neg(t)
            for j, bj in enumerate(other._c):
                rem[shift + j] = add(rem[shift + j], mul(nt, bj))
        return Poly._raw(ctx, quot), Poly._raw(ctx, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        result = Poly.const(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation --------------------------------------------------------

    def __call__(self, pt):
        if isinstance(pt, FieldElement) and pt.ctx != self.ctx:
            raise FieldMismatchError(f"evaluating a polynomial over {self.ctx} at an element of {pt.ctx}")
        x = self.ctx.index(pt)
        return FieldElement(self.ctx, self.eval_index(x))

    def eval_index(self, x: int) -> int:
        ctx = self.ctx
        if ctx.s == 1:
            acc = 0
            for c in reversed(self._c):
                acc = (acc * x + c) % ctx.p
            return acc
        acc = 0
        for c in reversed(self._c):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def eval_many(self, xs) -> np.ndarray:
        """Horner evaluation at an array of canonical indices."""
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(self._c):
            acc = self.ctx.vadd(self.ctx.vmul(acc, xs), c)
        return acc


def evaluate(f: Poly, pt) -> FieldElement:
    return f(pt)


def from_roots(ctx: FieldCtx, roots: Iterable) -> Poly:
    """Monic polynomial whose roots are exactly ``roots`` (pairwise distinct)."""
    idx = [ctx.index(r) for r in roots]
    if len(set(idx)) != len(idx):
        raise PolyError("from_roots needs pairwise distinct roots")
    c = np.ones(1, dtype=np.int64)
    for r in idx:
        nxt = np.concatenate(([0], c))  # x * c
        nxt[:-1] = ctx.vadd(nxt[:-1], ctx.vmul(ctx.neg(r), c))
        c = nxt
    return Poly._raw(ctx, c.tolist())


def interpolate(ctx: FieldCtx, points: Sequence) -> Poly:
    """Lagrange interpolant of degree < len(points) through ``(x, y)`` pairs."""
    if not points:
        raise PolyError("interpolation needs at least one point")
    xs = [ctx.index(x) for x, _ in points]
    ys = [ctx.index(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise PolyError("interpolation abscissae must be distinct")
    master = from_roots(ctx, xs)
    total = Poly(ctx)
    for xi, yi in zip(xs, ys):
        if yi == 0:
            continue
        basis, rem = divmod(master, from_roots(ctx, [xi]))
        assert rem.is_zero()
        denom = basis.eval_index(xi)
        total = total + basis.scale(ctx.mul(yi, ctx.inv(denom)))
    return total


def _xgcd(u: Poly, v: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*u + t*v == g`` and g monic."""
    ctx = u.ctx
    one, zero = Poly.const(ctx, 1), Poly(ctx)
    r0, r1 = u, v
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    k = FieldElement(ctx, ctx.inv(r0.lead))
    return r0.scale(k), s0.scale(k), t0.scale(k)


def poly_gcd(u: Poly, v: Poly) -> Poly:
    if u.ctx != v.ctx:
        raise FieldMismatchError("gcd of polynomials over different fields")
    if not u and not v:
        raise PolyError("gcd(0, 0) is undefined")
    return _xgcd(u, v)[0]


def bezout_min(u: Poly, v: Poly) -> tuple[Poly, Poly]:
    """Return ``(a, b)`` with ``a*u - b*v == 1``, deg a < deg v, deg b < deg u.

    ``a`` is the remainder of any Bezout coefficient modulo ``v``, which makes
    the answer unique.
    """
    if u.ctx != v.ctx:
        raise FieldMismatchError("Bezout over different fields")
    if u.degree < 1 or v.degree < 1:
        raise PolyError("bezout_min needs non-constant u and v")
    g, s, _ = _xgcd(u, v)
    if g.degree != 0:
        raise NotCoprimeError(f"gcd(u, v) = {g} is not 1")
    a = s % v
    b, rem = divmod(a * u - 1, v)
    if rem:
        raise AssertionError("Bezout back-substitution left a remainder")
    assert a.degree < v.degree and b.degree < u.degree
    return a, b


def bezout_target(u: Poly, v: Poly, z: Poly) -> tuple[Poly, Poly]:
    """Return ``(a, b)`` with ``a*u - b*v == z``, deg a < deg v, deg b < deg u.

    Requires deg z < deg u + deg v.
    """
    if z.ctx != u.ctx:
        raise FieldMismatchError("Bezout over different fields")
    if z.degree >= u.degree + v.degree:
        raise PolyError(
            f"target degree {z.degree} must be below deg u + deg v = {u.degree + v.degree}"
        )
    a_hat, _ = bezout_min(u, v)
    a = (a_hat * z) % v
    b, rem = divmod(a * u - z, v)
    if rem:
        raise AssertionError("Bezout back-substitution left a remainder")
    # both bounds follow from deg z < deg u + deg v; a failure here is a bug
    assert a.degree < v.degree, (a, v)
    assert b.degree < u.degree, (b, u)
    return a, b


# -- text format ------------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Render as ``c0 + c1*x + c2*x^2``; unit coefficients on x-powers are dropped."""
    ctx = f.ctx
    terms = []
    for i, c in enumerate(f.raw):
        if c == 0:
            continue
        coef = ctx.render(c)
        if i == 0:
            terms.append(coef)
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{coef}*{mono}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(?P<coef>\[[0-9,\s]*\]|\d+)(?:\*(?P<x1>x(?:\^(?P<e1>\d+))?))?|(?P<x2>x(?:\^(?P<e2>\d+))?))$")


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return Poly(ctx)
    coeffs: dict[int, int] = {}
    for term in text.split(" + "):
        m = _TERM.match(term.strip())
        if not m:
            raise PolyError(f"cannot parse term {term!r}")
        if m.group("x2"):
            c, e = 1, int(m.group("e2") or 1)
        else:
            try:
                c = ctx.parse(m.group("coef"))
            except (FieldError, ValueError) as exc:
                raise PolyError(f"bad coefficient in {term!r}: {exc}") from None
            e = int(m.group("e1") or 1) if m.group("x1") else 0
        if e in coeffs:
            raise PolyError(f"repeated power x^{e} in {text!r}")
        coeffs[e] = c
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly._raw(ctx, out)
