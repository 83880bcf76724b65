from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rssep.field import FULL, NONEXTENDED, FieldMismatchError, field_of_size, make_field
from rssep.poly import Poly
from rssep.rs import (
    CodeError,
    CodeParams,
    Codeword,
    all_codewords,
    all_messages,
    encode,
    fp_threshold,
    hamming,
    iter_polys,
    mds_min_distance,
    params_for_distance,
    ta_threshold,
)

from conftest import Q11_ORDER, Q11_VECTORS, int_horner

F11 = make_field(11)


def q11_code():
    return CodeParams(F11, 4, FULL, Q11_ORDER)


def test_encode_zero_polynomial():
    assert encode(CodeParams(F11, 4), Poly(F11)).symbols == (0,) * 11


def test_encode_printed_g1():
    g1 = Poly(F11, [5, 0, 5, 1])
    assert encode(q11_code(), g1).symbols == Q11_VECTORS["g1"]


def test_encode_g2_vector():
    # the printed vector is the encoding of -(x-7)(x-8)(x-9) = 10x^3 + 2x^2 + 7x + 9
    g2 = Poly(F11, [9, 7, 2, 10])
    assert encode(q11_code(), g2).symbols == Q11_VECTORS["g2"]
    # the printed coefficients 10x^3 + x^2 + x + 9 encode to something else
    assert encode(q11_code(), Poly(F11, [9, 1, 1, 10])).symbols != Q11_VECTORS["g2"]


def test_encode_guards():
    with pytest.raises(CodeError):
        encode(CodeParams(F11, 2), Poly(F11, [0, 0, 1]))
    with pytest.raises(FieldMismatchError):
        encode(CodeParams(F11, 2), Poly(make_field(13), [1]))
    with pytest.raises(CodeError):
        CodeParams(F11, 0)
    with pytest.raises(CodeError):
        CodeParams(F11, 12)
    with pytest.raises(CodeError):
        CodeParams(F11, 2, FULL, (1, 1, 2))


def test_code_lengths_per_mode():
    F = make_field(13)
    assert CodeParams(F, 3, FULL).n == 13
    assert CodeParams(F, 3, NONEXTENDED).n == 12
    assert CodeParams(F, 3, NONEXTENDED).d == 10


def test_hamming_examples():
    words = {k: Codeword(F11, v) for k, v in Q11_VECTORS.items()}
    assert hamming(words["f2"], words["g2"]) == 8
    assert hamming(words["f1"], words["g1"]) == 8
    assert hamming(words["g1"], words["g1"]) == 0
    with pytest.raises(CodeError):
        hamming(words["g1"], Codeword(F11, (0, 1)))
    with pytest.raises(FieldMismatchError):
        hamming(words["g1"], Codeword(make_field(13), (0,) * 11))


def test_params_for_distance():
    assert params_for_distance(F11, FULL, 8).k == 4
    assert params_for_distance(F11, FULL, 11).k == 1
    p = params_for_distance(make_field(13), NONEXTENDED, 10)
    assert (p.n, p.k) == (12, 3)
    with pytest.raises(CodeError):
        params_for_distance(F11, FULL, 12)


def test_thresholds():
    assert ta_threshold(11, 2) == Fraction(33, 4)
    assert 8 < ta_threshold(11, 2)
    assert ta_threshold(13, 2) == Fraction(39, 4)
    assert fp_threshold(11, 2) == Fraction(11, 2)
    # c^2 > n leaves the threshold above n - 1, out of reach of any code with k >= 2
    assert ta_threshold(7, 3) > 6


@pytest.mark.parametrize("q,k", [(q, k) for q in (2, 3, 4, 5, 7) for k in (1, 2, 3) if k <= q])
def test_mds_distance_exhaustive(q, k):
    F = field_of_size(q)
    params = CodeParams(F, k)
    words = all_codewords(params)
    assert len({tuple(w) for w in words}) == q**k  # injective
    # pairwise distances by brute force
    dist = (words[:, None, :] != words[None, :, :]).sum(axis=2)
    np.fill_diagonal(dist, q + 1)
    assert dist.min() == params.d == mds_min_distance(params)


def test_all_codewords_rows_follow_message_order():
    F = make_field(5)
    params = CodeParams(F, 2)
    words, msgs = all_codewords(params), all_messages(params)
    pts = params.points
    for row, m in zip(words, msgs):
        assert row.tolist() == [int_horner(m.tolist(), x, 5) for x in pts]
    assert msgs[1].tolist() == [1, 0]  # c0 varies fastest
    with pytest.raises(CodeError):
        all_codewords(CodeParams(F11, 5), limit=1000)


def test_iter_polys_counts():
    F = make_field(3)
    assert len(list(iter_polys(F, 1))) == 9


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(13, 1), (2, 3), (3, 2)]), st.data())
def test_encode_linear_and_distance(ps, data):
    F = make_field(*ps)
    k = data.draw(st.integers(1, 4))
    params = CodeParams(F, k)
    a = Poly(F, data.draw(st.lists(st.integers(0, F.q - 1), min_size=k, max_size=k)))
    b = Poly(F, data.draw(st.lists(st.integers(0, F.q - 1), min_size=k, max_size=k)))
    ea, eb, es = encode(params, a), encode(params, b), encode(params, a + b)
    assert list(es.symbols) == F.vadd(np.array(ea.symbols), np.array(eb.symbols)).tolist()
    if a != b:
        assert hamming(ea, eb) >= params.d


def test_codeword_json():
    w = encode(q11_code(), Poly(F11, [5, 0, 5, 1]))
    assert w.to_json() == {"symbols": [str(v) for v in Q11_VECTORS["g1"]], "source": "5 + 5*x^2 + x^3"}
    G = make_field(2, 2)
    assert Codeword(G, (3, 0)).render() == ["[1,1]", "[0,0]"]
