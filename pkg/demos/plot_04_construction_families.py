"""
Every construction family on one field
======================================

For q = 49 build one witness per family and compare the minimum distance
each one reaches against the frameproof and traceability thresholds.
"""

from rssep import (
    construct_c2_third, construct_c3_eighth, construct_fp_block, construct_general_2cm1,
    construct_lin_cilleruelo, construct_lin_factor, construct_m2_div, make_field, verify_witness,
)
from rssep.constructions import even_power_split

F = make_field(7, 2)
r, s = even_power_split(F)
builders = {
    "fp_block c=3": lambda: construct_fp_block(F, 3),
    "c2_third": lambda: construct_c2_third(F),
    "c3_eighth": lambda: construct_c3_eighth(F),
    "general c=4": lambda: construct_general_2cm1(F, 4),
    "m2_div m=2": lambda: construct_m2_div(F, 2),
    "lin_cilleruelo": lambda: construct_lin_cilleruelo(F),
    f"lin_factor r={r} s={s}": lambda: construct_lin_factor(F, r, s),
}

print(f"{'family':24s} {'c':>3s} {'deg':>4s} {'d':>4s} {'fp':>8s} {'ta':>8s}")
for name, build in builders.items():
    w = build()
    rep = verify_witness(w)
    print(f"{name:24s} {w.c:3d} {w.max_degree:4d} {w.claimed_d:4d} "
          f"{str(rep.fp_threshold):>8s} {str(rep.ta_threshold):>8s}")
