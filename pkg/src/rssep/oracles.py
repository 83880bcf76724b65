"""Brute-force checks for descendant sets, separation, frameproofness,
IPP certificates and traceability.

Everything here works directly from the definitions on explicit codeword
vectors and knows nothing about how a witness was built, so it serves as
the independent check for :mod:`rssep.constructions`.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .field import FieldCtx, FieldElement, FieldMismatchError
from .rs import CodeParams, Codeword, all_codewords

DEFAULT_MAX_CODEWORDS = 200
DEFAULT_PAIR_BUDGET = 10**7
DEFAULT_SCAN_LIMIT = 10**5


def default_budget() -> int:
    """Enumeration budget, overridable through ``RSSEP_BUDGET``."""
    env = os.environ.get("RSSEP_BUDGET")
    return int(env) if env else DEFAULT_PAIR_BUDGET


class OracleError(ValueError):
    pass


class BudgetExceeded(OracleError):
    """The requested enumeration is larger than the configured budget."""


class Verdict(str, enum.Enum):
    SEPARATED = "SEPARATED"
    NOT_SEPARATED = "NOT_SEPARATED"
    ALL_SEPARATED = "ALL_SEPARATED"
    FRAMEPROOF = "FRAMEPROOF"
    FRAMED = "FRAMED"
    TRACEABLE = "TRACEABLE"
    VIOLATED = "VIOLATED"
    NOT_VIOLATED = "NOT_VIOLATED"
    IPP_VIOLATED = "IPP_VIOLATED"


class Coalition:
    """A set of pairwise distinct codewords of the same length and field."""

    def __init__(self, members: Iterable[Codeword]):
        members = tuple(members)
        if not members:
            raise OracleError("empty coalition")
        ctx, n = members[0].ctx, len(members[0])
        for m in members:
            if m.ctx != ctx:
                raise FieldMismatchError("coalition mixes fields")
            if len(m) != n:
                raise OracleError("coalition members differ in length")
        if len({m.symbols for m in members}) != len(members):
            raise OracleError("coalition members must be pairwise distinct")
        self.members = members
        self.ctx = ctx
        self.n = n
        self.matrix = np.array([m.symbols for m in members], dtype=np.int64)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, word):
        symbols = word.symbols if isinstance(word, Codeword) else tuple(word)
        return any(m.symbols == symbols for m in self.members)


def _coalition(T) -> Coalition:
    return T if isinstance(T, Coalition) else Coalition(T)


@dataclass(frozen=True)
class PirateWord:
    ctx: FieldCtx
    symbols: tuple[int, ...]

    def __len__(self):
        return len(self.symbols)

    def render(self) -> list[str]:
        return [self.ctx.render(s) for s in self.symbols]


def _symbols(z) -> tuple[int, ...]:
    if isinstance(z, (PirateWord, Codeword)):
        return z.symbols
    return tuple(int(s) for s in z)


def column_sets(T) -> list[frozenset[FieldElement]]:
    T = _coalition(T)
    return [frozenset(FieldElement(T.ctx, int(s)) for s in col) for col in T.matrix.T]


def in_descendant(z, T) -> bool:
    T = _coalition(T)
    if isinstance(z, (PirateWord, Codeword)) and z.ctx != T.ctx:
        raise FieldMismatchError("word and coalition over different fields")
    zs = np.asarray(_symbols(z), dtype=np.int64)
    if len(zs) != T.n:
        raise OracleError(f"word length {len(zs)} != coalition length {T.n}")
    return bool((T.matrix == zs[None, :]).any(axis=0).all())


@dataclass
class SeparationReport:
    verdict: Verdict
    position: int | None = None
    mask: np.ndarray | None = field(default=None, repr=False)  # (q, n) shared-symbol mask

    @property
    def shared(self) -> list[list[int]]:
        if self.mask is None:
            return []
        return [np.flatnonzero(col).tolist() for col in self.mask.T]

    def to_json(self, ctx: FieldCtx) -> dict:
        out = {"verdict": self.verdict.value}
        if self.position is not None:
            out["position"] = self.position
        if self.mask is not None:
            out["shared"] = [[ctx.render(s) for s in col] for col in self.shared]
        return out


def _check_disjoint(U: Coalition, V: Coalition):
    if U.ctx != V.ctx:
        raise FieldMismatchError("coalitions over different fields")
    if U.n != V.n:
        raise OracleError("coalitions have different word lengths")
    if {m.symbols for m in U} & {m.symbols for m in V}:
        raise OracleError("coalitions overlap")


def are_separated(U, V) -> SeparationReport:
    """Separated iff some position has disjoint column sets.

    On NOT_SEPARATED the report lists, per position, the sorted symbols the
    two coalitions share there.
    """
    U, V = _coalition(U), _coalition(V)
    _check_disjoint(U, V)
    # presence masks: seen[x, i] is True iff symbol x occurs at position i
    q, cols = U.ctx.q, np.arange(U.n)
    seen_u = np.zeros((q, U.n), dtype=bool)
    seen_v = np.zeros((q, U.n), dtype=bool)
    seen_u[U.matrix, cols] = True
    seen_v[V.matrix, cols] = True
    both = seen_u & seen_v
    empty = np.flatnonzero(~both.any(axis=0))
    if empty.size:
        return SeparationReport(Verdict.SEPARATED, position=int(empty[0]))
    return SeparationReport(Verdict.NOT_SEPARATED, mask=both)


def forge_pirate(U, V) -> PirateWord:
    """Common descendant taking the smallest shared symbol at each position."""
    U, V = _coalition(U), _coalition(V)
    rep = are_separated(U, V)
    if rep.verdict is Verdict.SEPARATED:
        raise OracleError(f"coalitions are separated at position {rep.position}")
    return PirateWord(U.ctx, tuple(rep.mask.argmax(axis=0).tolist()))


def frameproof_check(u: Codeword, V) -> bool:
    """True iff ``u`` is *not* a descendant of ``V`` (V cannot frame u)."""
    V = _coalition(V)
    if u in V:
        raise OracleError("the framed word belongs to the coalition")
    return not in_descendant(u, V)


@dataclass
class IPPReport:
    verdict: Verdict
    in_U: bool
    in_V: bool

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "in_desc_U": self.in_U, "in_desc_V": self.in_V}


def ipp_violation_check(U, V, z) -> IPPReport:
    """Check the certificate: disjoint U, V that both produce z."""
    U, V = _coalition(U), _coalition(V)
    _check_disjoint(U, V)
    in_u, in_v = in_descendant(z, U), in_descendant(z, V)
    if not (in_u and in_v):
        raise OracleError(
            f"malformed IPP certificate: z in desc(U)={in_u}, z in desc(V)={in_v}"
        )
    return IPPReport(Verdict.IPP_VIOLATED, in_u, in_v)


@dataclass
class TAReport:
    verdict: Verdict
    coalition_distance: int
    outsider_distance: int
    outsider: tuple[int, ...] | None

    def to_json(self, ctx: FieldCtx) -> dict:
        out = {
            "verdict": self.verdict.value,
            "coalition_distance": self.coalition_distance,
            "outsider_distance": self.outsider_distance,
        }
        if self.outsider is not None:
            out["outsider"] = [ctx.render(s) for s in self.outsider]
        return out


def ta_violation_check(U, z, params: CodeParams, limit: int = DEFAULT_SCAN_LIMIT) -> TAReport:
    """Scan the whole code for an outsider at least as close to z as U's best.

    Ties count as violations: traceability needs a strictly closer traitor.
    """
    U = _coalition(U)
    if not in_descendant(z, U):
        raise OracleError("z is not a descendant of the coalition")
    if params.size > limit:
        raise BudgetExceeded(f"full scan of {params.size} codewords exceeds limit {limit}")
    words = all_codewords(params, limit)
    zs = np.asarray(_symbols(z), dtype=np.int64)
    dist = (words != zs[None, :]).sum(axis=1)
    inside = np.zeros(len(words), dtype=bool)
    for m in U.matrix:
        inside |= (words == m[None, :]).all(axis=1)
    if inside.sum() != len(U):
        raise OracleError("coalition members are not all codewords of this code")
    best_in = int(dist[inside].min())
    if inside.all():
        return TAReport(Verdict.NOT_VIOLATED, best_in, -1, None)
    out_dist = np.where(inside, np.iinfo(np.int64).max, dist)
    j = int(out_dist.argmin())
    best_out = int(out_dist[j])
    verdict = Verdict.VIOLATED if best_out <= best_in else Verdict.NOT_VIOLATED
    return TAReport(verdict, best_in, best_out, tuple(int(s) for s in words[j]))


# -- exhaustive scans over small codes --------------------------------------

def _subsets(M: int, c: int) -> np.ndarray:
    """All subsets of size 1..c of range(M), padded by repeating the first member."""
    rows = []
    for size in range(1, c + 1):
        for combo in itertools.combinations(range(M), size):
            rows.append(combo + (combo[0],) * (c - size))
    return np.array(rows, dtype=np.int64).reshape(-1, c)


def count_disjoint_pairs(M: int, c: int) -> int:
    """Unordered pairs of disjoint nonempty subsets of size <= c."""
    ordered = sum(comb(M, a) * comb(M - a, b) for a in range(1, c + 1) for b in range(1, c + 1))
    return ordered // 2


@dataclass
class ExhaustiveReport:
    verdict: Verdict
    params: CodeParams
    c: int
    checked: int
    U: list[tuple[int, ...]] | None = None
    V: list[tuple[int, ...]] | None = None
    word: tuple[int, ...] | None = None  # framed outsider or untraceable pirate

    def to_json(self) -> dict:
        ctx = self.params.ctx
        out = {
            "verdict": self.verdict.value,
            "p": ctx.p,
            "s": ctx.s,
            "q": ctx.q,
            "k": self.params.k,
            "n": self.params.n,
            "d": self.params.d,
            "mode": self.params.mode,
            "c": self.c,
            "checked": self.checked,
        }
        for key in ("U", "V"):
            words = getattr(self, key)
            if words is not None:
                out[key] = [[ctx.render(s) for s in w] for w in words]
        if self.word is not None:
            out["word"] = [ctx.render(s) for s in self.word]
        return out


def _guard(params: CodeParams, c: int, max_codewords: int, budget: int) -> int:
    if c < 1:
        raise OracleError("coalition size bound must be >= 1")
    if params.size > max_codewords:
        raise BudgetExceeded(
            f"code has {params.size} codewords, above the limit {max_codewords}"
        )
    pairs = count_disjoint_pairs(params.size, c)
    if pairs > budget:
        raise BudgetExceeded(f"{pairs} coalition pairs exceed the budget {budget}")
    return pairs


def exhaustive_sep_check(
    params: CodeParams,
    c: int,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    budget: int | None = None,
) -> ExhaustiveReport:
    """Enumerate every pair of disjoint coalitions of size <= c.

    Subsets are listed by size, then lexicographically by message index;
    the first non-separated pair in that order is returned.
    """
    budget = default_budget() if budget is None else budget
    _guard(params, c, max_codewords, budget)
    words = all_codewords(params, max_codewords)
    M = len(words)
    # agree[a, b, i]: codewords a and b share the symbol at position i
    agree = words[:, None, :] == words[None, :, :]
    subs = _subsets(M, c)
    checked = 0
    for i, U in enumerate(subs):
        cover_u = np.logical_or.reduce(agree[U], axis=0)  # (M, n)
        cand = subs[i + 1 :]
        cover = np.logical_or.reduce(cover_u[cand], axis=1)  # (S', n)
        disjoint = ~np.isin(cand, U).any(axis=1)
        checked += int(disjoint.sum())
        hits = np.flatnonzero(disjoint & cover.all(axis=1))
        if hits.size:
            V = cand[hits[0]]
            return ExhaustiveReport(
                Verdict.NOT_SEPARATED, params, c, checked,
                U=[tuple(int(s) for s in words[a]) for a in dict.fromkeys(U.tolist())],
                V=[tuple(int(s) for s in words[b]) for b in dict.fromkeys(V.tolist())],
            )
    return ExhaustiveReport(Verdict.ALL_SEPARATED, params, c, checked)


def exhaustive_fp_check(
    params: CodeParams,
    c: int,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    budget: int | None = None,
) -> ExhaustiveReport:
    """Search for a coalition of size <= c with an outsider in its descendant set."""
    budget = default_budget() if budget is None else budget
    if params.size > max_codewords:
        raise BudgetExceeded(f"code has {params.size} codewords, above the limit {max_codewords}")
    words = all_codewords(params, max_codewords)
    M = len(words)
    work = sum(comb(M, a) for a in range(1, c + 1)) * M
    if work > budget:
        raise BudgetExceeded(f"{work} coalition/word checks exceed the budget {budget}")
    agree = words[:, None, :] == words[None, :, :]
    checked = 0
    for V in _subsets(M, c):
        framed = np.logical_or.reduce(agree[V], axis=0).all(axis=1)
        framed[V] = False
        checked += M - len(set(V.tolist()))
        hits = np.flatnonzero(framed)
        if hits.size:
            return ExhaustiveReport(
                Verdict.FRAMED, params, c, checked,
                V=[tuple(int(s) for s in words[b]) for b in dict.fromkeys(V.tolist())],
                word=tuple(int(s) for s in words[hits[0]]),
            )
    return ExhaustiveReport(Verdict.FRAMEPROOF, params, c, checked)


def exhaustive_ta_check(
    params: CodeParams,
    c: int,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    budget: int | None = None,
) -> ExhaustiveReport:
    """Search every coalition T of size <= c and every z in desc(T) for a
    pirate word that no member of T is strictly closest to."""
    budget = default_budget() if budget is None else budget
    if params.size > max_codewords:
        raise BudgetExceeded(f"code has {params.size} codewords, above the limit {max_codewords}")
    words = all_codewords(params, max_codewords)
    M, n = words.shape
    subs = _subsets(M, c)
    work = 0
    for T in subs:
        sizes = [len(set(words[T, i].tolist())) for i in range(n)]
        work += int(np.prod(sizes, dtype=object)) * M
        if work > budget:
            raise BudgetExceeded(f"descendant scan exceeds the budget {budget}")
    checked = 0
    for T in subs:
        members = list(dict.fromkeys(T.tolist()))
        cols = [sorted(set(words[members, i].tolist())) for i in range(n)]
        desc = np.array(list(itertools.product(*cols)), dtype=np.int64)
        dist = (desc[:, None, :] != words[None, :, :]).sum(axis=2)  # (D, M)
        inside = np.zeros(M, dtype=bool)
        inside[members] = True
        checked += len(desc)
        if inside.all():
            continue
        best_in = dist[:, inside].min(axis=1)
        best_out = dist[:, ~inside].min(axis=1)
        bad = np.flatnonzero(best_out <= best_in)
        if bad.size:
            return ExhaustiveReport(
                Verdict.VIOLATED, params, c, checked,
                U=[tuple(int(s) for s in words[a]) for a in members],
                word=tuple(int(s) for s in desc[bad[0]]),
            )
    return ExhaustiveReport(Verdict.TRACEABLE, params, c, checked)

