"""
Two coalitions of the [11, 4, 8] code that are not separated
============================================================

Builds the degree-3 witness over GF(11), prints the four codewords and the
pirate word both coalitions can produce.
"""

from rssep import construct_q11_c2, forge_pirate, make_field, verify_witness
from rssep.constructions import witness_coalitions

F = make_field(11)
w = construct_q11_c2(F)
print("U =", [str(f) for f in w.U])
print("V =", [str(f) for f in w.V])

cu, cv = w.codewords()
for name, word in zip(("f1", "f2", "g1", "g2"), cu + cv):
    print(f"{name}: {word.symbols}")

rep = verify_witness(w)
print(rep)

z = forge_pirate(*witness_coalitions(w))
print("pirate word:", z.symbols)

# the same construction with the evaluation points shifted by one
shifted = construct_q11_c2(F, points=[(i + 1) % 11 for i in range(1, 12)])
print("shifted g2:", shifted.V[1])
