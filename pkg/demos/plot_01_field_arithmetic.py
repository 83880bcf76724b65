"""
Arithmetic in small finite fields
=================================

Elements are plain integers (base-p digits of the coefficient vector), so
they can live in numpy arrays.
"""

import numpy as np
from rssep import make_field

# a prime field and an extension field
F7 = make_field(7)
F9 = make_field(3, 2)
print(F7, "primitive element", F7.primitive)
print(F9, "modulus (low degree first)", F9.modulus, "primitive", F9.primitive)

# multiplication table of GF(9), built with the vectorised helpers
idx = np.arange(F9.q)
table = F9.vmul(idx[:, None], idx[None, :])
print(table)

# every nonzero element is a power of the primitive one
powers = [F9.pow(F9.primitive.value, i) for i in range(F9.q - 1)]
print("powers of the generator:", [F9.render(a) for a in powers])
assert sorted(powers) == list(range(1, F9.q))
