"""Exact arithmetic in GF(p^s).

Elements are stored as their canonical index: the coefficient vector
``(c0, c1, ..., c_{s-1})`` read as a base-p integer with ``c0`` the least
significant digit.  For ``s == 1`` the index is simply the residue.  Scalar
routines on :class:`FieldCtx` work on these indices; :class:`FieldElement`
wraps an index together with its context for user-facing arithmetic.  The
``v*`` methods are numpy-vectorised versions used by encoders and oracles.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

MAX_FIELD_SIZE = 1 << 16
ADD_TABLE_MAX = 1024

FULL = "full"
NONEXTENDED = "nonextended"


class FieldError(ValueError):
    """Bad field parameters or an illegal field operation."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` with ``q == p**s`` or None if q is not a prime power."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    s = 0
    while q > 1:
        q //= p
        s += 1
    return p, s


def prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if prime_power(q) is not None]


# -- dense polynomials over the prime field, low degree first ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over GF(p)."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        _trim(a)
    return a


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    s = len(m) - 1
    for deg in range(1, s // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _pmod(m, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    # product() varies the last slot fastest, so c0 is the most significant key
    for low in itertools.product(range(p), repeat=s):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {s} over GF({p})")


class FieldCtx:
    """Arithmetic context for GF(p^s).

    Build instances with :func:`make_field`; they are immutable and cached,
    so equal ``(p, s)`` always yield the same object.
    """

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus
        self._weights = np.array([p**i for i in range(s)], dtype=np.int64)
        self._digits = self._all_digits()
        self._exp = self._log = None
        self._add_table = None
        self.primitive = FieldElement(self, self._find_primitive())
        if s > 1:
            self._build_tables()

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __reduce__(self):
        return make_field, (self.p, self.s)

    # -- element construction --------------------------------------------

    def __call__(self, value) -> "FieldElement":
        return self.elem(value)

    def elem(self, value) -> "FieldElement":
        """Coerce ``value`` into this field.

        ints are reduced mod p when s == 1 and otherwise taken as a canonical
        index in [0, q); sequences are coefficient vectors (low degree first).
        """
        return FieldElement(self, self.index(value))

    def index(self, value) -> int:
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldMismatchError(f"element of {value.ctx} used in {self}")
            return value.value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if self.s == 1:
                return value % self.p
            if not 0 <= value < self.q:
                raise FieldError(f"canonical index {value} out of range for {self}")
            return value
        coeffs = list(value)
        if len(coeffs) > self.s:
            raise FieldError(f"coefficient vector too long for {self}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def render(self, a: int) -> str:
        if self.s == 1:
            return str(a)
        return "[" + ",".join(str(d) for d in self.digits(a)) + "]"

    def parse(self, text) -> int:
        """Inverse of :meth:`render`; also accepts a list of ints."""
        if isinstance(text, (list, tuple)):
            return self.index(text)
        text = str(text).strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise FieldError(f"malformed element {text!r}")
            body = text[1:-1].strip()
            coeffs = [int(t) for t in body.split(",")] if body else []
            if len(coeffs) != self.s or any(not 0 <= c < self.p for c in coeffs):
                raise FieldError(f"malformed element {text!r} for {self}")
            return self.index(coeffs)
        if self.s != 1:
            raise FieldError(f"element {text!r} must be a coefficient vector in {self}")
        v = int(text)
        if not 0 <= v < self.p:
            raise FieldError(f"residue {v} out of range for {self}")
        return v

    # -- scalar arithmetic on canonical indices ---------------------------

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        p, out, w = self.p, 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.s == 1:
            return -a % self.p
        p, out, w = self.p, 0, 1
        while a:
            a, da = divmod(a, p)
            out += (-da % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.s == 1:
            return pow(a, -1, self.p)
        return self._exp_list[-self._log_list[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.s == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp_list[self._log_list[a] * e % (self.q - 1)]

    def alpha_pow(self, e: int) -> int:
        """Canonical index of ``primitive ** e`` (any integer e)."""
        return self.pow(self.primitive.value, e % (self.q - 1))

    # -- vectorised arithmetic on index arrays ----------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.s == 1:
            return (a + b) % self.p
        d = (self._digits[a] + self._digits[b]) % self.p
        return d @ self._weights

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.s == 1:
            return -a % self.p
        return (-self._digits[a] % self.p) @ self._weights

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.s == 1:
            return a * b % self.p
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- construction helpers ---------------------------------------------

    def _all_digits(self) -> np.ndarray:
        idx = np.arange(self.q, dtype=np.int64)
        return (idx[:, None] // self._weights[None, :]) % self.p

    def _raw_mul(self, a: int, b: int) -> int:
        """Multiply via coefficient vectors modulo the field modulus."""
        if self.s == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        rem = _pmod(prod, self.modulus, self.p)
        return self.index(rem)

    def _mul_table_row(self, b: int) -> np.ndarray:
        """``a * b`` for every canonical index a, by schoolbook product and reduction."""
        p, s, m = self.p, self.s, self.modulus
        D = self._digits
        bd = self.digits(b)
        prod = np.zeros((self.q, 2 * s - 1), dtype=np.int64)
        for j, y in enumerate(bd):
            if y:
                prod[:, j : j + s] += D * y
        prod %= p
        for k in range(2 * s - 2, s - 1, -1):
            lead = prod[:, k].copy()
            for t, mt in enumerate(m):
                prod[:, k - s + t] = (prod[:, k - s + t] - lead * mt) % p
        return prod[:, :s] @ self._weights

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        fs = prime_factors(n)
        for g in range(1, self.q):
            if all(self._raw_pow(g, n // f) != 1 for f in fs):
                return g
        raise FieldError(f"no primitive element found in {self}")  # unreachable for a field

    def _build_tables(self):
        n = self.q - 1
        times_g = self._mul_table_row(self.primitive.value).tolist()
        exp = np.empty(n, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            x = times_g[x]
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        self._exp, self._log = exp, log
        self._exp_list, self._log_list = exp.tolist(), log.tolist()
        if self.q <= ADD_TABLE_MAX:
            idx = np.arange(self.q)
            self._add_table = self.vadd(idx[:, None], idx[None, :]).tolist()


@functools.cache
def make_field(p: int, s: int = 1) -> FieldCtx:
    """Return the field GF(p^s) with a deterministic modulus and generator.

    The modulus is the smallest monic irreducible of degree ``s`` comparing
    coefficients from the constant term up; the generator is the first
    element of :func:`canonical_order` with multiplicative order q - 1.

    >>> make_field(11).primitive
    FieldElement(2, GF(11))
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not isinstance(s, int) or s < 1:
        raise FieldError(f"extension degree must be >= 1, got {s}")
    if p**s > MAX_FIELD_SIZE:
        raise FieldError(f"field size {p}^{s} exceeds cap {MAX_FIELD_SIZE}")
    modulus = (0, 1) if s == 1 else _smallest_irreducible(p, s)
    return FieldCtx(p, s, modulus)


def field_of_size(q: int) -> FieldCtx:
    pp = prime_power(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    return make_field(*pp)


class FieldElement:
    """An element of a :class:`FieldCtx`; immutable value type."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatchError(f"cannot combine elements of {self.ctx} and {other.ctx}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ctx.index(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.value, self.ctx.inv(b)))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(b, self.ctx.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def order(self) -> int:
        """Multiplicative order (requires a nonzero element)."""
        if self.value == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.ctx.q - 1
        for f in prime_factors(n):
            while n % f == 0 and self.ctx.pow(self.value, n // f) == 1:
                n //= f
        return n

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            try:
                return self.value == self.ctx.index(other)
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return self.ctx.render(self.value)

    def __repr__(self):
        return f"FieldElement({self.ctx.render(self.value)}, {self.ctx!r})"


def canonical_order(ctx: FieldCtx) -> list[FieldElement]:
    """All q elements sorted by canonical index (base-p digit order)."""
    return [FieldElement(ctx, i) for i in range(ctx.q)]


@functools.lru_cache(maxsize=256)
def eval_point_indices(ctx: FieldCtx, mode: str = FULL) -> tuple[int, ...]:
    """Canonical indices of ``(0, 1, a, ..., a^{q-2})`` or its nonzero tail."""
    powers = [ctx.alpha_pow(e) for e in range(ctx.q - 1)]
    if mode == FULL:
        return (0, *powers)
    if mode == NONEXTENDED:
        return tuple(powers)
    raise FieldError(f"unknown evaluation mode {mode!r}")


def eval_points(ctx: FieldCtx, mode: str = FULL) -> list[FieldElement]:
    return [FieldElement(ctx, i) for i in eval_point_indices(ctx, mode)]


def as_indices(ctx: FieldCtx, values: Iterable) -> list[int]:
    return [ctx.index(v) for v in values]
