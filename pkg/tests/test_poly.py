import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from sympy import ZZ
from sympy.polys import galoistools as gt

from rssep.field import FieldMismatchError, make_field
from rssep.poly import (
    NotCoprimeError,
    Poly,
    PolyError,
    bezout_min,
    bezout_target,
    evaluate,
    format_poly,
    from_roots,
    interpolate,
    parse_poly,
    poly_gcd,
)

from conftest import high_first, int_horner

F7, F11, F13 = make_field(7), make_field(11), make_field(13)
F8, F9 = make_field(2, 3), make_field(3, 2)


def P(F, *coeffs):
    return Poly(F, coeffs)


# -- arithmetic ----------------------------------------------------------------

def test_product_of_linears_gf7():
    x = Poly.x(F7)
    assert (x - 1) * (x - 2) == P(F7, 2, 4, 1)


def test_division_example_gf7():
    q, r = divmod(P(F7, 0, 2, 4), P(F7, 4, 1))
    assert q == P(F7, 0, 4) and r.is_zero()


def test_identity_and_zero():
    a = P(F11, 3, 0, 7)
    assert a * 1 == a and a + 0 == a and (a - a).is_zero()
    assert Poly(F11).degree == -1
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly(F11))


coeff_lists = st.lists(st.integers(0, 12), min_size=0, max_size=12)


@settings(max_examples=300, deadline=None)
@given(coeff_lists, coeff_lists)
def test_prime_field_ring_ops_match_sympy(a, b):
    A, B = P(F13, *a), P(F13, *b)
    ha, hb = high_first(A.raw), high_first(B.raw)
    assert high_first((A * B).raw) == gt.gf_mul(ha, hb, 13, ZZ)
    assert high_first((A + B).raw) == gt.gf_add(ha, hb, 13, ZZ)
    assert high_first((A - B).raw) == gt.gf_sub(ha, hb, 13, ZZ)
    if hb:
        q, r = divmod(A, B)
        sq, sr = gt.gf_div(ha, hb, 13, ZZ)
        assert high_first(q.raw) == sq and high_first(r.raw) == sr


ext_coeffs = st.lists(st.integers(0, 8), min_size=0, max_size=10)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([F8, F9]), st.data())
def test_divmod_roundtrip_extension(F, data):
    hi = F.q - 1
    a = data.draw(st.lists(st.integers(0, hi), max_size=10))
    b = data.draw(st.lists(st.integers(0, hi), min_size=1, max_size=6))
    A, B = P(F, *a), P(F, *b)
    assume(not B.is_zero())
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree
    # multiplication commutes and distributes
    C = P(F, *a[::-1])
    assert A * B == B * A
    assert A * (B + C) == A * B + A * C


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        P(F7, 1) + P(F11, 1)
    with pytest.raises(FieldMismatchError):
        P(F7, 1, 1)(F11(2))


def test_pow_matches_repeated_product():
    f = P(F9, 1, 3, 5)
    assert f**5 == f * f * f * f * f
    assert f**0 == P(F9, 1)


# -- roots, interpolation, evaluation -----------------------------------------

def test_from_roots_examples():
    # the printed cubics x^3 - 6x^2 + 11x - 6 and x^3 - 9x^2 + 26x - 24, reduced mod 11
    assert from_roots(F11, [1, 2, 3]) == P(F11, -6 % 11, 11 % 11, -6 % 11, 1)
    assert from_roots(F11, [1, 2, 3]) == P(F11, 5, 0, 5, 1)
    assert from_roots(F11, [2, 3, 4]) == P(F11, -24 % 11, 26 % 11, -9 % 11, 1)
    assert from_roots(F11, []) == P(F11, 1)
    with pytest.raises(PolyError):
        from_roots(F11, [1, 1])


@pytest.mark.parametrize("F", [F7, F8, F9, make_field(2, 4)], ids=str)
def test_from_roots_vanishes_exactly_on_its_set(F):
    rng = np.random.default_rng(F.q)
    for _ in range(20):
        A = set(rng.choice(F.q, size=rng.integers(0, F.q), replace=False).tolist())
        f = from_roots(F, A)
        assert f.degree == len(A) and f.lead == 1
        vals = f.eval_many(np.arange(F.q))
        assert {a for a in range(F.q) if vals[a] == 0} == A


def test_interpolation_examples():
    g1 = P(F11, 5, 0, 5, 1)
    pts = [(a, g1.eval_index(a)) for a in (4, 5, 6)]
    assert pts == [(4, 6), (5, 2), (6, 5)]
    h = interpolate(F11, pts)
    assert h.degree <= 2
    # some multiple of (x-4)(x-5)(x-6) turns h into the printed f2 = 5x^3 + 10x + 9
    f2 = P(F11, 9, 10, 0, 5)
    quotient, rem = divmod(f2 - h, from_roots(F11, [4, 5, 6]))
    assert rem.is_zero() and quotient.degree == 0
    assert interpolate(F11, [(3, 8)]) == P(F11, 8)
    assert interpolate(F7, [(0, 0), (1, 1), (2, 2)]) == Poly.x(F7)
    with pytest.raises(PolyError):
        interpolate(F7, [(1, 2), (1, 3)])


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([F7, F13, F8, F9]), st.data())
def test_interpolation_reproduces_ordinates(F, data):
    xs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=F.q, unique=True))
    ys = data.draw(st.lists(st.integers(0, F.q - 1), min_size=len(xs), max_size=len(xs)))
    f = interpolate(F, list(zip(xs, ys)))
    assert f.degree < len(xs)
    assert [f.eval_index(x) for x in xs] == ys


def test_evaluation():
    g1 = P(F11, 5, 0, 5, 1)
    assert g1(4) == 6 and evaluate(g1, F11(4)) == 6
    assert g1(1) == 0
    assert all(Poly(F11)(a) == 0 for a in range(11))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 12), max_size=8), st.integers(0, 12))
def test_horner_matches_integer_oracle(c, x):
    f = P(F13, *c)
    assert f.eval_index(x) == int_horner([v % 13 for v in c], x, 13)
    assert int(f.eval_many([x])[0]) == f.eval_index(x)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_distinct_low_degree_polys_differ_somewhere(q):
    from rssep.field import field_of_size

    F = field_of_size(q)
    pts = np.arange(q)
    k = min(q, 3)
    seen = {}
    for coeffs in itertools.product(range(q), repeat=k):
        word = tuple(P(F, *coeffs).eval_many(pts).tolist())
        assert word not in seen, (coeffs, seen.get(word))
        seen[word] = coeffs


# -- gcd and Bezout -------------------------------------------------------------

def test_gcd_examples():
    x = Poly.x(F11)
    assert poly_gcd(x * x, x) == x
    assert poly_gcd(from_roots(F11, [1, 2]), from_roots(F11, [3, 4])) == P(F11, 1)
    v = P(F11, 4, 0, 3)
    assert poly_gcd(Poly(F11), v) == v.monic()
    with pytest.raises(PolyError):
        poly_gcd(Poly(F11), Poly(F11))


def test_bezout_min_examples():
    u, v = from_roots(F7, [1, 2]), from_roots(F7, [3])
    a, b = bezout_min(u, v)
    assert a == P(F7, 4) and b == P(F7, 0, 4)
    x = Poly.x(F11)
    assert bezout_min(x, x - 1) == (P(F11, 1), P(F11, 1))
    with pytest.raises(NotCoprimeError):
        bezout_min(x, x)
    with pytest.raises(PolyError):
        bezout_min(P(F11, 3), x)


def test_bezout_target_examples():
    u, v = from_roots(F7, [1, 2]), from_roots(F7, [3, 4])
    assert bezout_target(u, v, P(F7, 1)) == bezout_min(u, v)
    a, b = bezout_target(u, v, u)
    assert a * u - b * v == u and a.degree < v.degree and b.degree < u.degree
    rng = np.random.default_rng(7)
    for _ in range(100):
        z = P(F7, *rng.integers(0, 7, size=4))
        a, b = bezout_target(u, v, z)
        assert a * u - b * v == z
        assert a.degree < v.degree and b.degree < u.degree
    with pytest.raises(PolyError):
        bezout_target(u, v, Poly.monomial(F7, 1, 4))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([F7, F11, F13, F8, F9]), st.data())
def test_bezout_identity_property(F, data):
    roots = data.draw(st.lists(st.integers(0, F.q - 1), min_size=2, max_size=F.q, unique=True))
    cut = data.draw(st.integers(1, len(roots) - 1))
    u, v = from_roots(F, roots[:cut]), from_roots(F, roots[cut:])
    a, b = bezout_min(u, v)
    assert a * u - b * v == P(F, 1)
    top = u.degree + v.degree
    z = P(F, *data.draw(st.lists(st.integers(0, F.q - 1), max_size=top)))
    a, b = bezout_target(u, v, z)
    assert a * u - b * v == z
    assert a.degree < v.degree and b.degree < u.degree


# -- text format --------------------------------------------------------------

def test_format_examples():
    assert format_poly(P(F11, 5, 0, 5, 1)) == "5 + 5*x^2 + x^3"
    assert format_poly(Poly(F11)) == "0"
    assert format_poly(P(F13, 0, 0, 0, 12)) == "12*x^3"
    assert format_poly(P(F9, 0, 5)) == "[2,1]*x"


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([F7, F13, F8, F9]), st.data())
def test_format_parse_roundtrip(F, data):
    f = P(F, *data.draw(st.lists(st.integers(0, F.q - 1), max_size=9)))
    assert parse_poly(F, format_poly(f)) == f


def test_parse_rejects_garbage():
    for text in ("x^", "3*y", "1 + 1", "12", "2*x + 3*x"):
        with pytest.raises(PolyError):
            parse_poly(F11, text)
