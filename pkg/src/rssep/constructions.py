"""Explicit pairs of disjoint, non-separated coalitions in Reed-Solomon codes.

Each ``construct_*`` function returns a :class:`WitnessPair` of polynomial
families ``U`` and ``V``.  Their evaluations form two disjoint coalitions
whose column sets meet at every position.  :func:`verify_witness` re-checks
all of that with the brute-force oracles.

Block partitions slice the canonical element order consecutively, larger
blocks first.  When that makes two polynomials coincide, the block
constructions fall back to the deterministic orders of
:func:`element_orders`, so every witness is still reproducible byte for byte.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .field import FULL, NONEXTENDED, FieldCtx, eval_point_indices
from .oracles import (
    Coalition,
    PirateWord,
    Verdict,
    are_separated,
    forge_pirate,
    in_descendant,
    ipp_violation_check,
)
from .poly import Poly, bezout_min, bezout_target, from_roots, interpolate
from .rs import CodeParams, Codeword, encode_rows, fp_threshold, ta_threshold


class Theorem(str, enum.Enum):
    FP_BLOCK = "FP_BLOCK"
    Q11_C2 = "Q11_C2"
    C2_THIRD = "C2_THIRD"
    C3_EIGHTH = "C3_EIGHTH"
    GEN_2CM1 = "GEN_2CM1"
    M2_DIV = "M2_DIV"
    LIN_CILLERUELO = "LIN_CILLERUELO"
    LIN_FACTOR = "LIN_FACTOR"


class HypothesisError(ValueError):
    """Parameters outside the regime a construction covers."""


class CoverageError(RuntimeError):
    """The power-difference cover of F_q failed; this would contradict Cilleruelo's theorem."""


class InternalConstructionError(RuntimeError):
    """A construction produced something its derivation rules out."""


class WitnessError(AssertionError):
    """A witness failed verification; ``clause`` names the failed check."""

    def __init__(self, clause: str, detail: str):
        super().__init__(f"{clause}: {detail}")
        self.clause = clause
        self.detail = detail


@dataclass(frozen=True)
class WitnessPair:
    theorem: Theorem
    ctx: FieldCtx
    mode: str
    c: int
    U: tuple[Poly, ...]
    V: tuple[Poly, ...]
    max_degree: int
    claimed_d: int
    partition: tuple[tuple[int, ...], ...] = ()
    points: tuple[int, ...] | None = None
    info: dict = field(default_factory=dict, compare=False)

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def eval_points(self) -> tuple[int, ...]:
        return self.points if self.points is not None else eval_point_indices(self.ctx, self.mode)

    @property
    def n(self) -> int:
        return len(self.eval_points)

    @property
    def params(self) -> CodeParams:
        """Smallest RS code containing every polynomial of the witness."""
        return CodeParams(self.ctx, self.max_degree + 1, self.mode, self.eval_points)

    def codewords(self) -> tuple[list[Codeword], list[Codeword]]:
        pts = self.eval_points
        rows_u = encode_rows(self.ctx, pts, self.U)
        rows_v = encode_rows(self.ctx, pts, self.V)
        cu = [Codeword(self.ctx, tuple(r), f) for r, f in zip(rows_u.tolist(), self.U)]
        cv = [Codeword(self.ctx, tuple(r), f) for r, f in zip(rows_v.tolist(), self.V)]
        return cu, cv


def _degree(f: Poly) -> int:
    return max(f.degree, 0)


def _finish(theorem, ctx, mode, c, U, V, partition=(), points=None, **info) -> WitnessPair:
    U, V = tuple(U), tuple(V)
    polys = U + V
    if len(set(polys)) != len(polys):
        raise InternalConstructionError(f"{theorem.value}: coalition polynomials collide")
    D = max(_degree(f) for f in polys)
    n = len(points) if points is not None else len(eval_point_indices(ctx, mode))
    return WitnessPair(
        theorem, ctx, mode, c, U, V, D, n - D,
        tuple(tuple(b) for b in partition), points, info,
    )


def block_sizes(total: int, parts: int) -> list[int]:
    """``total = parts*l + r`` split into r blocks of l+1 followed by parts-r of l."""
    l, r = divmod(total, parts)
    return [l + 1] * r + [l] * (parts - r)


def _slice(elems, sizes) -> list[list[int]]:
    out, at = [], 0
    for size in sizes:
        out.append(list(elems[at : at + size]))
        at += size
    return out


def element_orders(ctx: FieldCtx):
    """Candidate orders for cutting F_q into blocks, first choice first.

    Yields ``(label, order)``: the canonical order, then the evaluation order
    ``0, 1, a, a^2, ...`` and some rotations of it, then shuffles seeded by
    ``(q, t)``.  Consecutive canonical blocks can be additive cosets of the
    prime field, which makes some constructions degenerate; the
    multiplicative order breaks that structure.
    """
    yield "canonical", list(range(ctx.q))
    pts = list(eval_point_indices(ctx, FULL))
    for t in range(min(ctx.q, 64)):
        yield f"power+{t}", pts[t:] + pts[:t]
    for t in range(256):
        order = list(range(ctx.q))
        random.Random(f"{ctx.q}:{t}").shuffle(order)
        yield f"shuffle:{t}", order


def _first_nondegenerate(ctx: FieldCtx, build):
    for label, order in element_orders(ctx):
        try:
            w = build(order)
        except InternalConstructionError as exc:
            if "collide" not in str(exc):
                raise
            continue
        w.info["element_order"] = label
        return w
    raise InternalConstructionError(f"every block ordering of GF({ctx.q}) degenerates")


def _covers_field(ctx: FieldCtx, points, U, V) -> bool:
    pts = np.asarray(points, dtype=np.int64)
    eu = encode_rows(ctx, pts, U)
    ev = encode_rows(ctx, pts, V)
    return bool((eu[:, None, :] == ev[None, :, :]).any(axis=(0, 1)).all())


# -- separated-by-blocks constructions --------------------------------------

def _fp_blocks(ctx: FieldCtx, c: int, seeds, check_distinct: bool, order=None):
    q = ctx.q
    if c < 2:
        raise HypothesisError("c must be at least 2")
    if c >= q:
        raise HypothesisError(f"c = {c} must be below q = {q}")
    k1 = -(-q // c)  # ceil(q/c) = k - 1
    blocks = _slice(range(q) if order is None else order, block_sizes(q, c))
    if seeds is None:
        seeds = [Poly.const(ctx, i) for i in range(c)]
    seeds = list(seeds)
    if len(seeds) != c:
        raise HypothesisError(f"need exactly c = {c} seed polynomials, got {len(seeds)}")
    if check_distinct and len(set(seeds)) != c:
        raise HypothesisError("seed polynomials must be pairwise distinct")
    for f in seeds:
        if f.ctx != ctx:
            raise HypothesisError("seed polynomial over the wrong field")
        if f.degree > k1:
            raise HypothesisError(f"seed {f} has degree above k-1 = {k1}")
    V = [f + from_roots(ctx, b) for f, b in zip(seeds, blocks)]
    return seeds, V, blocks, k1


def construct_fp_block(ctx: FieldCtx, c: int, seeds=None) -> WitnessPair:
    """Non-separation at distance q - ceil(q/c) for c not dividing q.

    ``g_i = f_i + prod_{a in A_i} (x - a)`` over a partition of F_q into c
    blocks; the seeds ``f_i`` default to the first c field constants.
    """
    if ctx.q % c == 0:
        raise HypothesisError(
            f"c = {c} divides q = {ctx.q}: that regime belongs to the additive-subgroup "
            "construction for c | q and is not built here"
        )
    def build(order):
        U, V, blocks, k1 = _fp_blocks(ctx, c, seeds, True, order)
        return _finish(Theorem.FP_BLOCK, ctx, FULL, c, U, V, blocks, k_minus_1=k1)

    w = _first_nondegenerate(ctx, build)
    k1 = w.info["k_minus_1"]
    if w.max_degree > k1:
        raise InternalConstructionError(f"FP_BLOCK degree {w.max_degree} exceeds {k1}")
    return w


@dataclass(frozen=True)
class FrameproofDemo:
    """A word ``u`` framed by the coalition ``V``."""

    ctx: FieldCtx
    c: int
    u: Poly
    V: tuple[Poly, ...]
    partition: tuple[tuple[int, ...], ...]

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.ctx, max(_degree(f) for f in (self.u, *self.V)) + 1)


def construct_fp_remark(ctx: FieldCtx, c: int) -> FrameproofDemo:
    """Block construction with every seed equal to ``x``.

    All seeds coincide on purpose: each field point a lies in some block, so
    some ``g_i = x + p_i`` takes the value a there and the coalition of the
    g_i frames the word encoding x.
    """
    x = Poly.x(ctx)
    _, V, blocks, _ = _fp_blocks(ctx, c, [x] * c, check_distinct=False)
    return FrameproofDemo(ctx, c, x, tuple(V), tuple(tuple(b) for b in blocks))


# -- the [11, 4, 8] example ---------------------------------------------------

Q11_POINT_ORDER = tuple(list(range(1, 11)) + [0])


def construct_q11_c2(ctx: FieldCtx, points=None, gamma1=1) -> WitnessPair:
    """Two pairs of cubics over GF(11) that are not separated.

    ``points`` assigns the eleven field elements to alpha_1..alpha_11 (default
    alpha_i = i, so alpha_11 = 0).  Codewords are listed in the order
    1, 2, ..., 10, 0 regardless of the assignment.
    """
    if ctx.q != 11:
        raise HypothesisError("this construction lives in GF(11)")
    alphas = [ctx.index(a) for a in (points if points is not None else range(1, 12))]
    if len(alphas) != 11 or len(set(alphas)) != 11:
        raise HypothesisError("points must list all 11 elements of GF(11) exactly once")
    g1_scale = ctx.index(gamma1)
    if g1_scale == 0:
        raise HypothesisError("gamma_1 must be nonzero")
    a10, a11 = alphas[9], alphas[10]
    g1 = from_roots(ctx, alphas[0:3]).scale(g1_scale)
    h = interpolate(ctx, [(a, g1.eval_index(a)) for a in alphas[3:6]])
    P = from_roots(ctx, alphas[3:6])
    Q = from_roots(ctx, alphas[6:9])
    P10, P11 = P.eval_index(a10), P.eval_index(a11)
    Q10, Q11 = Q.eval_index(a10), Q.eval_index(a11)
    lhs, rhs = ctx.mul(Q10, P11), ctx.mul(Q11, P10)
    if lhs == rhs:
        raise HypothesisError(
            "singular system: prod(a10 - a_{6+i})(a11 - a_{3+i}) equals "
            "prod(a11 - a_{6+i})(a10 - a_{3+i})"
        )
    # phi*P(a) - gamma*Q(a) = -h(a) at a10 and a11, by Cramer's rule
    det_inv = ctx.inv(ctx.sub(lhs, rhs))
    h10, h11 = h.eval_index(a10), h.eval_index(a11)
    phi = ctx.mul(ctx.sub(ctx.mul(h10, Q11), ctx.mul(Q10, h11)), det_inv)
    gamma = ctx.mul(ctx.sub(ctx.mul(h10, P11), ctx.mul(P10, h11)), det_inv)
    if gamma == 0:
        raise HypothesisError("this assignment forces gamma_2 = 0, so g_2 would equal f_1")
    f2 = h + P.scale(phi)
    g2 = Q.scale(gamma)
    if len({Poly(ctx), f2, g1, g2}) < 4:
        # e.g. f2 = g1 exactly when phi_2 = gamma_1; the system itself is fine
        raise HypothesisError("this assignment makes f_2 coincide with another coalition polynomial")
    blocks = [alphas[0:3], alphas[3:6], alphas[6:9], alphas[9:11]]
    return _finish(
        Theorem.Q11_C2, ctx, FULL, 2, [Poly(ctx), f2], [g1, g2], blocks,
        points=tuple(ctx.index(x) for x in Q11_POINT_ORDER),
        phi2=phi, gamma2=gamma, det_lhs=lhs, det_rhs=rhs,
    )


def construct_c2_third(ctx: FieldCtx) -> WitnessPair:
    """c = 2 with three blocks A11, A12, A21 (A22 empty).

    f1 = 0, f2 = p21 - p11, g1 = -p11, g2 = -p12.  Coverage: f1 = g1 on A11,
    f1 = g2 on A12, f2 = g1 on A21.
    """
    q = ctx.q
    if q < 3:
        raise HypothesisError("needs q >= 3")
    A11, A12, A21 = _slice(range(q), block_sizes(q, 3))
    p11, p12, p21 = (from_roots(ctx, b) for b in (A11, A12, A21))
    w = _finish(
        Theorem.C2_THIRD, ctx, FULL, 2,
        [Poly(ctx), p21 - p11], [-p11, -p12], [A11, A12, A21],
        stated_d=q - q // 3, remainder=q % 3,
    )
    if w.max_degree > q // 3 + 1:
        raise InternalConstructionError("C2_THIRD degree above l + 1")
    return w


# Order in which the eight nonempty blocks are filled (larger blocks first).
# u21 and u31 take the two largest blocks so that the target of the Bezout
# solve for (v31, v21) has degree below deg u31 + deg u21.
C3_BLOCK_ORDER = ((2, 1), (3, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3))


def construct_c3_eighth(ctx: FieldCtx) -> WitnessPair:
    """c = 3 via minimal-degree Bezout identities on a 3x3 block grid."""
    if ctx.q < 8:
        raise HypothesisError("needs q >= 8 so that all eight blocks are nonempty")
    return _first_nondegenerate(ctx, lambda order: _c3_eighth(ctx, order))


def _c3_eighth(ctx: FieldCtx, order) -> WitnessPair:
    q = ctx.q
    l = q // 8
    blocks = dict(zip(C3_BLOCK_ORDER, _slice(order, block_sizes(q, 8))))
    u = {ij: from_roots(ctx, b) for ij, b in blocks.items()}
    u[1, 1] = -Poly.const(ctx, 1)
    v = {}
    v[3, 3], v[3, 2] = bezout_min(u[3, 3], u[3, 2])
    v[2, 3], v[2, 2] = bezout_min(u[2, 3], u[2, 2])
    vu = lambda i, j: v[i, j] * u[i, j]  # noqa: E731
    v[3, 1], v[2, 1] = bezout_target(u[3, 1], u[2, 1], vu(3, 3) - vu(2, 3))
    v[1, 3], v[1, 2] = bezout_target(u[1, 3], u[1, 2], vu(3, 3) - vu(3, 2))
    v[1, 1] = vu(3, 3) - vu(3, 1) - vu(1, 3)
    g = [-vu(3, 1), -vu(3, 2), -vu(3, 3)]
    f = [g[0] + vu(1, 1), g[1] + vu(2, 2), g[2] + vu(3, 3)]
    for i in range(3):
        for j in range(3):
            if f[i] - g[j] != vu(i + 1, j + 1):
                raise AssertionError(f"f{i+1} - g{j+1} != v{i+1}{j+1} u{i+1}{j+1}")
    if not _covers_field(ctx, range(q), f, g):
        raise AssertionError("x^q - x does not divide prod(f_i - g_j)")
    partition = [blocks[ij] for ij in C3_BLOCK_ORDER]
    w = _finish(
        Theorem.C3_EIGHTH, ctx, FULL, 3, f, g, partition,
        block_labels=[f"{i}{j}" for i, j in C3_BLOCK_ORDER],
        v_degrees={f"{i}{j}": v[i, j].degree for (i, j) in sorted(v)},
    )
    if w.max_degree > 2 * l + 1:
        raise InternalConstructionError(f"C3_EIGHTH degree {w.max_degree} exceeds 2l+1 = {2*l+1}")
    return w


def construct_general_2cm1(ctx: FieldCtx, c: int) -> WitnessPair:
    """Any c >= 2 with 2c - 1 blocks: f1 = 0, f_{i+1} = p_{c+i} - p_i, g_i = -p_i.

    Blocks fall back to :func:`element_orders` when canonical slicing makes
    two of the polynomials coincide (e.g. q = 5, c = 3).
    """
    q = ctx.q
    if c < 2:
        raise HypothesisError("c must be at least 2")
    if q < 2 * c - 1:
        raise HypothesisError(f"needs q >= 2c - 1 = {2 * c - 1}")

    def build(order):
        A = _slice(order, block_sizes(q, 2 * c - 1))
        p = [None] + [from_roots(ctx, b) for b in A]  # 1-based
        U = [Poly(ctx)] + [p[c + i] - p[i] for i in range(1, c)]
        V = [-p[i] for i in range(1, c + 1)]
        return _finish(Theorem.GEN_2CM1, ctx, FULL, c, U, V, A, stated_d=q - q // (2 * c - 1))

    w = _first_nondegenerate(ctx, build)
    if w.max_degree > q // (2 * c - 1) + 1:
        raise InternalConstructionError("GEN_2CM1 degree above l + 1")
    return w


# -- multiplicative constructions ------------------------------------------

def construct_m2_div(ctx: FieldCtx, m: int, c: int | None = None) -> WitnessPair:
    """Non-extended code when m^2 | q - 1.

    f_i = a^{-i(q-1)/m} x^{(q-1)/m^2} and g_i = a^{i(q-1)/m^2} for i < m; the
    point a^e with e = L m^2 + r m + s satisfies f_r = g_s there.
    """
    q = ctx.q
    c = m if c is None else c
    if m < 2:
        raise HypothesisError("m must be at least 2")
    if (q - 1) % (m * m):
        raise HypothesisError("m^2 does not divide q-1")
    if c < m:
        raise HypothesisError(f"c = {c} must be at least m = {m}")
    e = (q - 1) // (m * m)
    U = [Poly.monomial(ctx, ctx.alpha_pow(-i * (q - 1) // m), e) for i in range(m)]
    V = [Poly.const(ctx, ctx.alpha_pow(i * e)) for i in range(m)]
    classes = [[ctx.alpha_pow(t + L * m * m) for L in range(e)] for t in range(m * m)]
    return _finish(
        Theorem.M2_DIV, ctx, NONEXTENDED, c, U, V, classes,
        m=m, stated_d=q - e,
    )


def cilleruelo_bound(q: int) -> tuple[int, int]:
    """``(floor, ceil)`` of 2 q^{3/4}, computed exactly."""
    N = 16 * q**3  # (2 q^{3/4})^4
    lo = math.isqrt(math.isqrt(N))
    while (lo + 1) ** 4 <= N:
        lo += 1
    while lo**4 > N:
        lo -= 1
    return lo, lo if lo**4 == N else lo + 1


def power_difference_bound(ctx: FieldCtx) -> int | None:
    """Smallest B with {a^i - a^j : 0 <= i, j <= B} = F_q, or None if no B works."""
    q = ctx.q
    covered = np.zeros(q, dtype=bool)
    covered[0] = True
    left = q - 1
    powers = np.empty(q - 1, dtype=np.int64)
    for B in range(q - 1):
        powers[B] = ctx.alpha_pow(B)
        if B:
            d = ctx.vsub(powers[:B], powers[B])
            hit = np.concatenate([d, ctx.vneg(d)])
            left -= int(np.unique(hit[~covered[hit]]).size)
            covered[hit] = True
        if left == 0:
            return B
    return None


def construct_lin_cilleruelo(ctx: FieldCtx) -> WitnessPair:
    """Linear witness f_i = x - a^i, g_i = -a^i for i = 1..ceil(2 q^{3/4})."""
    q = ctx.q
    _, c = cilleruelo_bound(q)
    if c > q - 1:
        raise HypothesisError(
            f"c = ceil(2 q^(3/4)) = {c} exceeds q - 1 = {q - 1}; q too small for this construction"
        )
    powers = [ctx.alpha_pow(i) for i in range(1, c + 1)]
    pw = np.asarray(powers, dtype=np.int64)
    diffs = ctx.vsub(pw[:, None], pw[None, :])
    missing = q - len(np.unique(diffs))
    if missing:
        raise CoverageError(f"power differences miss {missing} elements of GF({q})")
    U = [Poly(ctx, [ctx.neg(a), 1]) for a in powers]
    V = [Poly.const(ctx, ctx.neg(a)) for a in powers]
    return _finish(Theorem.LIN_CILLERUELO, ctx, FULL, c, U, V, exponents=[1, c])


def construct_lin_factor(ctx: FieldCtx, r: int, s: int) -> WitnessPair:
    """Linear witness from a coprime split q - 1 = r s.

    U = {a^{ri} x : i < s}, V = {a^{sj} : j < r} plus the zero polynomial,
    which takes care of the point 0.
    """
    q = ctx.q
    if r < 1 or s < 1 or r * s != q - 1:
        raise HypothesisError(f"r*s must equal q-1 = {q - 1}")
    if math.gcd(r, s) != 1:
        raise HypothesisError(f"gcd(r, s) must be 1, got {math.gcd(r, s)}")
    U = [Poly.monomial(ctx, ctx.alpha_pow(r * i), 1) for i in range(s)]
    V = [Poly.const(ctx, ctx.alpha_pow(s * j)) for j in range(r)] + [Poly(ctx)]
    roots = {(s * j - r * i) % (q - 1) for i in range(s) for j in range(r)}
    if len(roots) != q - 1:
        raise InternalConstructionError("quotients a^{sj - ri} are not all distinct")
    return _finish(Theorem.LIN_FACTOR, ctx, FULL, max(s, r + 1), U, V, r=r, s=s)


def even_power_split(ctx: FieldCtx) -> tuple[int, int]:
    """Coprime split of q - 1 for q = p^{2t}, p odd.

    Takes r = (p^t - 1)/2 or (p^t + 1)/2, whichever is odd, and s = (q-1)/r,
    so that s <= 2(sqrt(q) + 1).
    """
    p, e = ctx.p, ctx.s
    if p == 2 or e % 2:
        raise HypothesisError("needs q = p^(2t) with p odd")
    root = p ** (e // 2)
    r = (root - 1) // 2
    if r % 2 == 0:
        r = (root + 1) // 2
    return r, (ctx.q - 1) // r


# -- padding and verification ----------------------------------------------

def pad_witness(w: WitnessPair, c: int | None = None) -> WitnessPair:
    """Grow both coalitions to exactly c members with unused constants."""
    c = w.c if c is None else c
    used = set(w.U) | set(w.V)
    fresh = (Poly.const(w.ctx, a) for a in range(w.q))
    fresh = (f for f in fresh if f not in used)
    U, V = list(w.U), list(w.V)
    try:
        while len(U) < c:
            U.append(next(fresh))
        while len(V) < c:
            V.append(next(fresh))
    except StopIteration:
        raise HypothesisError(f"not enough unused constants to pad to c = {c}") from None
    return replace(w, U=tuple(U), V=tuple(V), c=c, info={**w.info, "padded": True})


def degree_budget(w: WitnessPair) -> int:
    q, c = w.q, w.c
    t = w.theorem
    if t is Theorem.FP_BLOCK:
        return -(-q // c)
    if t is Theorem.Q11_C2:
        return 3
    if t is Theorem.C2_THIRD:
        return q // 3 + 1
    if t is Theorem.C3_EIGHTH:
        return 2 * (q // 8) + 1
    if t is Theorem.GEN_2CM1:
        return q // (2 * c - 1) + 1
    if t is Theorem.M2_DIV:
        return (q - 1) // w.info["m"] ** 2
    return 1


@dataclass
class VerificationReport:
    theorem: Theorem
    q: int
    n: int
    c: int
    sizes: tuple[int, int]
    max_degree: int
    degree_budget: int
    claimed_d: int
    fp_threshold: Fraction
    ta_threshold: Fraction
    pirate: PirateWord
    verdict: str = "PASS"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "theorem": self.theorem.value,
            "q": self.q,
            "n": self.n,
            "c": self.c,
            "sizes": list(self.sizes),
            "max_degree": self.max_degree,
            "degree_budget": self.degree_budget,
            "claimed_d": self.claimed_d,
            "fp_threshold": str(self.fp_threshold),
            "ta_threshold": str(self.ta_threshold),
            "below_fp_threshold": self.claimed_d <= self.fp_threshold,
            "below_ta_threshold": self.claimed_d <= self.ta_threshold,
            "pirate": self.pirate.render(),
        }


def verify_witness(w: WitnessPair, pad_to_c: bool = False) -> VerificationReport:
    """Re-encode the witness and check it clause by clause.

    Raises :class:`WitnessError` naming the first failed clause: ``sizes``,
    ``distinct``, ``disjoint``, ``degree``, ``not_separated``, ``pirate`` or
    ``ipp``.
    """
    if pad_to_c:
        w = pad_witness(w)
    if not (1 <= len(w.U) <= w.c and 1 <= len(w.V) <= w.c):
        raise WitnessError("sizes", f"|U| = {len(w.U)}, |V| = {len(w.V)}, c = {w.c}")
    cu, cv = w.codewords()
    for name, words in (("U", cu), ("V", cv)):
        if len({x.symbols for x in words}) != len(words):
            raise WitnessError("distinct", f"coalition {name} has repeated codewords")
    if {x.symbols for x in cu} & {x.symbols for x in cv}:
        raise WitnessError("disjoint", "U and V share a codeword")
    degrees = [_degree(f) for f in w.U + w.V]
    budget = degree_budget(w)
    if max(degrees) != w.max_degree:
        raise WitnessError("degree", f"achieved max degree {max(degrees)} != declared {w.max_degree}")
    if w.claimed_d != w.n - w.max_degree:
        raise WitnessError("degree", f"claimed d {w.claimed_d} != n - max degree {w.n - w.max_degree}")
    if w.max_degree >= w.n:
        raise WitnessError("degree", "polynomial degree reaches the code length")
    exact = w.theorem is Theorem.M2_DIV
    if (w.max_degree != budget) if exact else (w.max_degree > budget):
        raise WitnessError("degree", f"max degree {w.max_degree} violates budget {budget}")
    U, V = Coalition(cu), Coalition(cv)
    sep = are_separated(U, V)
    if sep.verdict is not Verdict.NOT_SEPARATED:
        raise WitnessError("not_separated", f"column sets are disjoint at position {sep.position}")
    z = forge_pirate(U, V)
    if not (in_descendant(z, U) and in_descendant(z, V)):
        raise WitnessError("pirate", "forged word is not a common descendant")
    try:
        ipp_violation_check(U, V, z)
    except ValueError as exc:
        raise WitnessError("ipp", str(exc)) from None
    return VerificationReport(
        w.theorem, w.q, w.n, w.c, (len(w.U), len(w.V)), w.max_degree, budget, w.claimed_d,
        fp_threshold(w.n, w.c), ta_threshold(w.n, w.c), z,
    )


def witness_coalitions(w: WitnessPair) -> tuple[Coalition, Coalition]:
    cu, cv = w.codewords()
    return Coalition(cu), Coalition(cv)

