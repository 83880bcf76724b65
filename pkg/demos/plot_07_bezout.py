"""
Bezout with a prescribed right-hand side
========================================

Given coprime u, v and a target z, find a, b of small degree with
a*u - b*v = z.
"""

from rssep import bezout_target, from_roots, make_field, parse_poly

F = make_field(13)
u = from_roots(F, [1, 2, 3])
v = from_roots(F, [4, 5])
z = parse_poly(F, "3 + x + 7*x^3")
a, b = bezout_target(u, v, z)
print("a =", a, "| b =", b)
print("a*u - b*v =", a * u - b * v)
