"""Reed-Solomon codes that fail to be c-separating: explicit witnesses and
brute-force oracles for separating, frameproof, IPP and TA properties."""

from .constructions import (
    CoverageError,
    HypothesisError,
    InternalConstructionError,
    Theorem,
    VerificationReport,
    WitnessError,
    WitnessPair,
    cilleruelo_bound,
    construct_c2_third,
    construct_c3_eighth,
    construct_fp_block,
    construct_fp_remark,
    construct_general_2cm1,
    construct_lin_cilleruelo,
    construct_lin_factor,
    construct_m2_div,
    construct_q11_c2,
    even_power_split,
    pad_witness,
    power_difference_bound,
    verify_witness,
)
from .field import FULL, NONEXTENDED, FieldCtx, FieldElement, canonical_order, eval_points, make_field
from .oracles import (
    Coalition,
    PirateWord,
    Verdict,
    are_separated,
    exhaustive_fp_check,
    exhaustive_sep_check,
    exhaustive_ta_check,
    forge_pirate,
    frameproof_check,
    in_descendant,
    ipp_violation_check,
    ta_violation_check,
)
from .poly import Poly, bezout_min, bezout_target, format_poly, from_roots, interpolate, parse_poly
from .rs import CodeParams, Codeword, encode

__version__ = "0.1.0"
