"""
The pirate word defeats nearest-codeword tracing
================================================

Scans all 11^4 codewords: some outsider lies at least as close to the
pirate word as the best coalition member.
"""

from rssep import construct_q11_c2, forge_pirate, make_field, ta_violation_check
from rssep.constructions import witness_coalitions

w = construct_q11_c2(make_field(11))
U, V = witness_coalitions(w)
z = forge_pirate(U, V)
rep = ta_violation_check(U, z, w.params)
print(rep.verdict.value)
print("closest member at", rep.coalition_distance, "closest outsider at", rep.outsider_distance)
print("outsider:", rep.outsider)
