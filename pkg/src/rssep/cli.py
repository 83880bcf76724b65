"""Command-line front end: ``rssep <subcommand> ...``.

Every run prints one summary line (or, with ``--json``, the full report) and
exits 0 only on a passing outcome.  Refusals and failures print a JSON error
object ``{"error": kind, "message": ...}`` and exit nonzero.
"""

from __future__ import annotations

import argparse
import sys

from . import constructions as C
from .field import FULL, NONEXTENDED, FieldError, make_field, prime_power, prime_powers
from .oracles import (
    DEFAULT_MAX_CODEWORDS,
    DEFAULT_SCAN_LIMIT,
    BudgetExceeded,
    OracleError,
    Verdict,
    exhaustive_fp_check,
    exhaustive_sep_check,
    exhaustive_ta_check,
    forge_pirate,
    in_descendant,
    ipp_violation_check,
    ta_violation_check,
)
from .poly import Poly, format_poly
from .rs import CodeError, CodeParams
from .serialize import WitnessFormatError, dump_witness, dumps, element_to_json, loads

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_REFUSED = 2

THEOREMS = {t.value.lower(): t for t in C.Theorem}


class CommandError(Exception):
    def __init__(self, kind: str, message: str, code: int = EXIT_REFUSED, **extra):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.code = code
        self.extra = extra


def _emit(obj):
    sys.stdout.write(dumps(obj))


def _summary(w: C.WitnessPair, rep: C.VerificationReport) -> str:
    return (
        f"{w.theorem.value} q={w.q} n={w.n} c={w.c} |U|={len(w.U)} |V|={len(w.V)} "
        f"max_degree={w.max_degree} claimed_d={w.claimed_d} "
        f"fp_threshold={rep.fp_threshold} ta_threshold={rep.ta_threshold}"
    )


def _field(p, s):
    try:
        return make_field(p, s)
    except FieldError as exc:
        raise CommandError("field", str(exc)) from None


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise CommandError("usage", f"--{name.replace('_', '-')} is required for {args.theorem}")
    return val


def _build(args) -> C.WitnessPair:
    ctx = _field(args.p, args.s)
    t = THEOREMS[args.theorem]
    if t is C.Theorem.FP_BLOCK:
        return C.construct_fp_block(ctx, _need(args, "c"))
    if t is C.Theorem.Q11_C2:
        points = None
        if args.points:
            points = [int(v) for v in args.points.split(",")]
        return C.construct_q11_c2(ctx, points, args.gamma1)
    if t is C.Theorem.C2_THIRD:
        return C.construct_c2_third(ctx)
    if t is C.Theorem.C3_EIGHTH:
        return C.construct_c3_eighth(ctx)
    if t is C.Theorem.GEN_2CM1:
        return C.construct_general_2cm1(ctx, _need(args, "c"))
    if t is C.Theorem.M2_DIV:
        return C.construct_m2_div(ctx, _need(args, "m"), args.c)
    if t is C.Theorem.LIN_CILLERUELO:
        return C.construct_lin_cilleruelo(ctx)
    r, s = args.r, args.s_factor
    if r is None and s is None:
        r, s = C.even_power_split(ctx)
    elif r is None or s is None:
        raise CommandError("usage", "lin_factor needs both --r and --s-factor (or neither)")
    return C.construct_lin_factor(ctx, r, s)


def cmd_construct(args) -> int:
    try:
        w = _build(args)
    except (C.HypothesisError, C.CoverageError, ValueError) as exc:
        raise CommandError("hypothesis", str(exc)) from None
    if args.pad_to_c:
        try:
            w = C.pad_witness(w)
        except C.HypothesisError as exc:
            raise CommandError("hypothesis", str(exc)) from None
    try:
        rep = C.verify_witness(w)
    except C.WitnessError as exc:
        raise CommandError("verification", exc.detail, EXIT_FAIL, clause=exc.clause) from None
    text = dump_witness(w, rep.pirate)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(_summary(w, rep))
    else:
        sys.stdout.write(text)
        print(_summary(w, rep), file=sys.stderr)
    return EXIT_OK


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CommandError("io", str(exc)) from None
    try:
        return loads(text)
    except WitnessFormatError as exc:
        raise CommandError("parse", str(exc)) from None


def cmd_verify(args) -> int:
    w, pirate = _load(args.inp)
    try:
        rep = C.verify_witness(w)
        if pirate is not None:
            U, V = C.witness_coalitions(w)
            if len(pirate) != w.n or not (in_descendant(pirate, U) and in_descendant(pirate, V)):
                raise C.WitnessError("pirate", "stored pirate word is not a common descendant")
    except C.WitnessError as exc:
        raise CommandError("verification", exc.detail, EXIT_FAIL, clause=exc.clause) from None
    except (CodeError, OracleError, FieldError) as exc:
        raise CommandError("verification", str(exc), EXIT_FAIL, clause="encoding") from None
    if args.json:
        _emit(rep.to_json())
    else:
        print("PASS " + _summary(w, rep))
    return EXIT_OK


def cmd_oracle(args) -> int:
    ctx = _field(args.p, args.s)
    try:
        params = CodeParams(ctx, args.k, args.eval)
    except CodeError as exc:
        raise CommandError("parameters", str(exc)) from None
    check = {"sep": exhaustive_sep_check, "fp": exhaustive_fp_check, "ta": exhaustive_ta_check}[args.mode]
    try:
        rep = check(params, args.c, args.max_codewords, args.budget)
    except BudgetExceeded as exc:
        raise CommandError("budget", str(exc)) from None
    except OracleError as exc:
        raise CommandError("parameters", str(exc)) from None
    if args.json:
        _emit(rep.to_json())
    else:
        print(
            f"{rep.verdict.value} q={ctx.q} n={params.n} k={params.k} d={params.d} "
            f"c={args.c} checked={rep.checked}"
        )
    passing = {Verdict.ALL_SEPARATED, Verdict.FRAMEPROOF, Verdict.TRACEABLE}
    return EXIT_OK if rep.verdict in passing else EXIT_FAIL


def cilleruelo_table(qmax: int, qmin: int = 2) -> list[dict]:
    rows = []
    for q in prime_powers(qmin, qmax):
        ctx = make_field(*prime_power(q))
        B = C.power_difference_bound(ctx)
        lo, _ = C.cilleruelo_bound(q)
        ok = B is not None and B <= lo
        rows.append({"q": q, "B": B, "floor_2q34": lo, "within": ok, "asserted": q >= 29})
    return rows


def cmd_cilleruelo(args) -> int:
    if args.qmax > 10**4:
        raise CommandError("usage", "--qmax is capped at 10000")
    rows = cilleruelo_table(args.qmax, args.qmin)
    failures = [r for r in rows if r["asserted"] and not r["within"]]
    if args.json:
        _emit({"rows": rows, "failures": [r["q"] for r in failures]})
    else:
        for r in rows:
            B = "none" if r["B"] is None else r["B"]
            flag = "ok" if r["within"] else ("FAIL" if r["asserted"] else "small-q")
            print(f"q={r['q']} B={B} floor(2q^(3/4))={r['floor_2q34']} {flag}")
        print(f"checked={len(rows)} failures={len(failures)}")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_pirate(args) -> int:
    w, _ = _load(args.inp)
    ctx = w.ctx
    U, V = C.witness_coalitions(w)
    try:
        z = forge_pirate(U, V)
        ipp = ipp_violation_check(U, V, z)
    except OracleError as exc:
        raise CommandError("certificate", str(exc), EXIT_FAIL) from None
    out = {
        "pirate": [element_to_json(ctx, a) for a in z.symbols],
        "ipp": ipp.to_json(),
    }
    params = w.params
    if params.size <= args.scan_limit:
        ta = ta_violation_check(U, z, params, args.scan_limit)
        out["ta"] = ta.to_json(ctx)
        ta_text = f"TA {ta.verdict.value} (coalition {ta.coalition_distance}, outsider {ta.outsider_distance})"
    else:
        out["ta"] = {"verdict": "CERTIFICATE_ONLY", "codewords": params.size}
        ta_text = f"TA certificate-only: {params.size} codewords exceed scan limit {args.scan_limit}"
    if args.json:
        _emit(out)
    else:
        print(f"z=({','.join(z.render())}) {ipp.verdict.value} {ta_text}")
    return EXIT_OK


def cmd_field_info(args) -> int:
    ctx = _field(args.p, args.s)
    info = {
        "p": ctx.p,
        "s": ctx.s,
        "q": ctx.q,
        "modulus": format_poly(Poly(make_field(ctx.p), ctx.modulus)) if ctx.s > 1 else None,
        "primitive": element_to_json(ctx, ctx.primitive.value),
        "eval_order": [element_to_json(ctx, ctx.alpha_pow(e)) for e in range(min(ctx.q - 1, 16))],
    }
    if args.json:
        _emit(info)
    else:
        mod = f" modulus={info['modulus']}" if info["modulus"] else ""
        print(f"GF({ctx.q}) p={ctx.p} s={ctx.s}{mod} primitive={ctx.render(ctx.primitive.value)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rssep", description="Non-separation witnesses for Reed-Solomon codes")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and verify a witness pair")
    c.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--s", type=int, default=1, help="extension degree")
    c.add_argument("--c", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--s-factor", type=int, dest="s_factor", help="s in q - 1 = r*s")
    c.add_argument("--points", help="comma-separated alpha_1..alpha_11 for q11_c2")
    c.add_argument("--gamma1", type=int, default=1)
    c.add_argument("--pad-to-c", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="re-check a witness file")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive property scan of a small code")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--s", type=int, default=1)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--c", type=int, required=True)
    o.add_argument("--mode", choices=("sep", "fp", "ta"), default="sep")
    o.add_argument("--eval", choices=(FULL, NONEXTENDED), default=FULL, help="evaluation point set")
    o.add_argument("--budget", type=int, help="max coalition pairs (default: $RSSEP_BUDGET or 10^7)")
    o.add_argument("--max-codewords", type=int, default=DEFAULT_MAX_CODEWORDS)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    cl = sub.add_parser("cilleruelo", help="power-difference cover sweep")
    cl.add_argument("--qmax", type=int, required=True)
    cl.add_argument("--qmin", type=int, default=2)
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(func=cmd_cilleruelo)

    pr = sub.add_parser("pirate", help="forge z and report IPP/TA certificates")
    pr.add_argument("--in", dest="inp", required=True)
    pr.add_argument("--scan-limit", type=int, default=DEFAULT_SCAN_LIMIT)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_pirate)

    f = sub.add_parser("field-info", help="modulus and primitive element of GF(p^s)")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--s", type=int, default=1)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_field_info)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        _emit({"error": exc.kind, "message": exc.message, **exc.extra})
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
