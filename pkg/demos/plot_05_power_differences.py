"""
Differences of few powers cover a prime field
=============================================

For prime q the differences g^i - g^j with i, j up to about 2 q^(3/4)
already hit every element.  The smallest exponent bound that works is
compared with 2 q^(3/4).
"""

import numpy as np
import matplotlib.pyplot as plt

from rssep import cilleruelo_bound, make_field, power_difference_bound
from rssep.field import is_prime

qs = [q for q in range(29, 1500) if is_prime(q)]
needed = [power_difference_bound(make_field(q)) for q in qs]
bound = [cilleruelo_bound(q)[0] for q in qs]
assert all(b <= c for b, c in zip(needed, bound))

plt.plot(qs, needed, ".", label="smallest exponent bound")
plt.plot(qs, bound, "-", label="floor(2 q^{3/4})")
plt.xlabel("q")
plt.legend()
plt.savefig("power_differences.png")
print("ratio needed / bound, max:", max(np.array(needed) / np.array(bound)))
