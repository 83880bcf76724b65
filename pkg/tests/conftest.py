"""Shared fixtures and independent oracles.

The oracles here deliberately avoid rssep's own arithmetic: prime-field and
extension-field products come from sympy's galoistools, and polynomial
evaluation is done with plain integers wherever the field is prime.
"""

import itertools

import pytest
from sympy import ZZ
from sympy.polys import galoistools as gt

from rssep.field import make_field

# printed vectors of the [11, 4, 8] example, points listed as 1, 2, ..., 10, 0
Q11_VECTORS = {
    "f1": (0,) * 11,
    "f2": (2, 3, 9, 6, 2, 5, 1, 9, 4, 5, 9),
    "g1": (0, 0, 0, 6, 2, 5, 10, 1, 6, 9, 5),
    "g2": (6, 1, 10, 5, 2, 6, 0, 0, 0, 5, 9),
}
Q11_SHIFTED_VECTORS = {
    "f1": (0,) * 11,
    "f2": (9, 2, 3, 9, 6, 2, 5, 1, 9, 4, 5),
    "g1": (5, 0, 0, 0, 6, 2, 5, 10, 1, 6, 9),
    "g2": (9, 6, 1, 10, 5, 2, 6, 0, 0, 0, 5),
}
Q11_ORDER = tuple(range(1, 11)) + (0,)


def high_first(coeffs):
    """rssep stores c0 first; galoistools wants the leading coefficient first."""
    out = list(reversed(list(coeffs)))
    while out and out[0] == 0:
        out.pop(0)
    return out


def low_first(coeffs):
    return list(reversed(coeffs))


def gf_ext_mul(a, b, modulus, p):
    """Product of two coefficient vectors in GF(p)[x]/(modulus), via sympy."""
    prod = gt.gf_mul(high_first(a), high_first(b), p, ZZ)
    rem = gt.gf_rem(prod, high_first(modulus), p, ZZ)
    return tuple(low_first(rem) + [0] * (len(modulus) - 1 - len(rem)))


def int_horner(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def smallest_irreducible_oracle(p, s):
    """Enumerate monic degree-s polynomials low-first and ask sympy."""
    for low in itertools.product(range(p), repeat=s):
        cand = list(low) + [1]
        if gt.gf_irreducible_p(high_first(cand), p, ZZ):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial")


@pytest.fixture(params=[(2, 1), (3, 1), (7, 1), (11, 1), (2, 3), (3, 2), (2, 4), (5, 2)], ids=str)
def small_field(request):
    return make_field(*request.param)
