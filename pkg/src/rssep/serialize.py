"""JSON interchange for witness pairs.

Field elements are decimal strings for prime fields and coefficient arrays
(low degree first) for extension fields; polynomials use the text format of
:func:`rssep.poly.format_poly`.  :func:`dumps` sorts keys so that a
load/dump cycle reproduces the input byte for byte.
"""

from __future__ import annotations

import json

from .constructions import Theorem, WitnessPair, witness_coalitions
from .field import FULL, NONEXTENDED, FieldCtx, FieldError, make_field
from .oracles import OracleError, PirateWord, forge_pirate
from .poly import PolyError, format_poly, parse_poly

REQUIRED_KEYS = (
    "theorem", "p", "s", "q", "mode", "c", "claimed_d", "max_degree",
    "U", "V", "partition", "pirate",
)


class WitnessFormatError(ValueError):
    pass


def element_to_json(ctx: FieldCtx, a: int):
    if ctx.s == 1:
        return str(a)
    return list(ctx.digits(a))


def element_from_json(ctx: FieldCtx, obj) -> int:
    if ctx.s == 1 and not isinstance(obj, str):
        raise WitnessFormatError(f"prime-field element must be a decimal string, got {obj!r}")
    if ctx.s > 1 and not isinstance(obj, list):
        raise WitnessFormatError(f"extension-field element must be a coefficient array, got {obj!r}")
    try:
        return ctx.parse(obj if ctx.s == 1 else "[" + ",".join(str(int(c)) for c in obj) + "]")
    except (FieldError, ValueError) as exc:
        raise WitnessFormatError(str(exc)) from None


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, str)) or v is None:
        return v
    return int(v)


def witness_to_json(w: WitnessPair, pirate: PirateWord | None = None) -> dict:
    """Witness as a plain dict; the pirate word is forged when not given."""
    ctx = w.ctx
    if pirate is None:
        try:
            pirate = forge_pirate(*witness_coalitions(w))
        except OracleError:
            pirate = None  # separated input: nothing to forge
    out = {
        "theorem": w.theorem.value,
        "p": ctx.p,
        "s": ctx.s,
        "q": ctx.q,
        "mode": w.mode,
        "c": w.c,
        "claimed_d": w.claimed_d,
        "max_degree": w.max_degree,
        "U": [format_poly(f) for f in w.U],
        "V": [format_poly(f) for f in w.V],
        "partition": [[element_to_json(ctx, a) for a in b] for b in w.partition],
        "pirate": None if pirate is None else [element_to_json(ctx, a) for a in pirate.symbols],
    }
    if w.points is not None:
        out["points"] = [element_to_json(ctx, a) for a in w.points]
    if w.info:
        out["info"] = _jsonable(w.info)
    return out


def witness_from_json(obj: dict) -> tuple[WitnessPair, PirateWord | None]:
    if not isinstance(obj, dict):
        raise WitnessFormatError("witness must be a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in obj]
    if missing:
        raise WitnessFormatError(f"missing keys: {', '.join(missing)}")
    try:
        theorem = Theorem(obj["theorem"])
    except ValueError:
        raise WitnessFormatError(f"unknown theorem {obj['theorem']!r}") from None
    try:
        ctx = make_field(int(obj["p"]), int(obj["s"]))
    except (FieldError, TypeError, ValueError) as exc:
        raise WitnessFormatError(f"bad field: {exc}") from None
    if obj["q"] != ctx.q:
        raise WitnessFormatError(f"q = {obj['q']} does not match p^s = {ctx.q}")
    if obj["mode"] not in (FULL, NONEXTENDED):
        raise WitnessFormatError(f"unknown mode {obj['mode']!r}")
    try:
        U = tuple(parse_poly(ctx, t) for t in obj["U"])
        V = tuple(parse_poly(ctx, t) for t in obj["V"])
    except (PolyError, FieldError, TypeError) as exc:
        raise WitnessFormatError(f"bad polynomial: {exc}") from None
    partition = tuple(tuple(element_from_json(ctx, a) for a in b) for b in obj["partition"])
    points = None
    if obj.get("points") is not None:
        points = tuple(element_from_json(ctx, a) for a in obj["points"])
    pirate = None
    if obj["pirate"] is not None:
        pirate = PirateWord(ctx, tuple(element_from_json(ctx, a) for a in obj["pirate"]))
    for key in ("c", "claimed_d", "max_degree"):
        if not isinstance(obj[key], int) or isinstance(obj[key], bool):
            raise WitnessFormatError(f"{key} must be an integer")
    w = WitnessPair(
        theorem, ctx, obj["mode"], obj["c"], U, V, obj["max_degree"], obj["claimed_d"],
        partition, points, dict(obj.get("info", {})),
    )
    return w, pirate


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> tuple[WitnessPair, PirateWord | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WitnessFormatError(f"not valid JSON: {exc}") from None
    return witness_from_json(obj)


def dump_witness(w: WitnessPair, pirate: PirateWord | None = None) -> str:
    return dumps(witness_to_json(w, pirate))
