"""Reed-Solomon codes: parameters, encoding and distance bookkeeping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .field import FULL, FieldCtx, FieldElement, FieldMismatchError, eval_point_indices
from .poly import Poly


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    """An ``[n, k, n-k+1]`` Reed-Solomon code.

    ``points`` overrides the evaluation order (canonical indices); by default
    it is ``(0, 1, a, ..., a^{q-2})`` for ``mode='full'`` and the nonzero tail
    for ``mode='nonextended'``.
    """

    ctx: FieldCtx
    k: int
    mode: str = FULL
    points: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.points is None:
            object.__setattr__(self, "points", eval_point_indices(self.ctx, self.mode))
        else:
            pts = tuple(self.ctx.index(x) for x in self.points)
            if len(set(pts)) != len(pts):
                raise CodeError("evaluation points must be distinct")
            object.__setattr__(self, "points", pts)
        if not 1 <= self.k <= self.n:
            raise CodeError(f"dimension k={self.k} outside [1, n={self.n}]")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def size(self) -> int:
        return self.ctx.q**self.k


@dataclass(frozen=True)
class Codeword:
    """A length-n word; ``symbols`` are canonical field indices."""

    ctx: FieldCtx
    symbols: tuple[int, ...]
    source: Poly | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i) -> FieldElement:
        return FieldElement(self.ctx, self.symbols[i])

    @property
    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, s) for s in self.symbols]

    def render(self) -> list[str]:
        return [self.ctx.render(s) for s in self.symbols]

    def to_json(self) -> dict:
        out = {"symbols": self.render()}
        if self.source is not None:
            out["source"] = str(self.source)
        return out


def encode(params: CodeParams, f: Poly) -> Codeword:
    if f.ctx != params.ctx:
        raise FieldMismatchError(f"polynomial over {f.ctx} for a code over {params.ctx}")
    if f.degree > params.k - 1:
        raise CodeError(f"degree {f.degree} too high for k={params.k}")
    return Codeword(params.ctx, tuple(int(v) for v in f.eval_many(params.points)), f)


def encode_rows(ctx: FieldCtx, points: Sequence[int], polys: Sequence[Poly]) -> np.ndarray:
    """Evaluate each polynomial at ``points``; no degree check."""
    pts = np.asarray(points, dtype=np.int64)
    if not polys:
        return np.zeros((0, len(pts)), dtype=np.int64)
    width = max(len(f.raw) for f in polys)
    coeffs = np.zeros((len(polys), width), dtype=np.int64)
    for row, f in zip(coeffs, polys):
        row[: len(f.raw)] = f.raw
    # Horner on all rows at once
    acc = np.zeros((len(polys), len(pts)), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        acc = ctx.vadd(ctx.vmul(acc, pts[None, :]), coeffs[:, j : j + 1])
    return acc


def all_messages(params: CodeParams) -> np.ndarray:
    """Coefficient vectors of every polynomial of degree < k, lexicographic."""
    q, k = params.ctx.q, params.k
    grid = np.indices((q,) * k).reshape(k, -1).T
    return grid[:, ::-1]  # column i holds the coefficient of x^i


def all_codewords(params: CodeParams, limit: int = 10**5) -> np.ndarray:
    """Matrix of every codeword, rows ordered like :func:`all_messages`."""
    if params.size > limit:
        raise CodeError(f"code has {params.size} codewords, above the scan limit {limit}")
    ctx = params.ctx
    msgs = all_messages(params)
    pts = np.asarray(params.points, dtype=np.int64)
    powers = np.ones_like(pts)
    out = np.zeros((msgs.shape[0], len(pts)), dtype=np.int64)
    for i in range(params.k):
        out = ctx.vadd(out, ctx.vmul(msgs[:, i : i + 1], powers[None, :]))
        powers = ctx.vmul(powers, pts)
    return out


def hamming(a: Codeword, b: Codeword) -> int:
    if a.ctx != b.ctx:
        raise FieldMismatchError("words over different fields")
    if len(a) != len(b):
        raise CodeError(f"length mismatch {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a.symbols, b.symbols))


def params_for_distance(ctx: FieldCtx, mode: str, d: int) -> CodeParams:
    n = len(eval_point_indices(ctx, mode))
    if not 1 <= d <= n:
        raise CodeError(f"distance {d} outside [1, {n}]")
    return CodeParams(ctx, n - d + 1, mode)


def ta_threshold(n: int, c: int) -> Fraction:
    """``n - n/c^2``: distances strictly above it guarantee c-TA (when q > c)."""
    return n - Fraction(n, c * c)


def fp_threshold(n: int, c: int) -> Fraction:
    """``n - n/c``: distances strictly above it guarantee c-FP."""
    return n - Fraction(n, c)


def mds_min_distance(params: CodeParams, limit: int = 10**5) -> int:
    """Minimum weight of a nonzero codeword, by enumeration."""
    words = all_codewords(params, limit)
    weights = (words != 0).sum(axis=1)
    return int(weights[1:].min()) if len(weights) > 1 else params.n


def iter_polys(ctx: FieldCtx, max_degree: int):
    for coeffs in itertools.product(range(ctx.q), repeat=max_degree + 1):
        yield Poly._raw(ctx, list(coeffs))
