import itertools

import pytest
from hypothesis import given, strategies as st

from shadowcodes.zring import (
    DimensionError,
    RingParams,
    RingVector,
    additive_order,
    dot,
    element_weight,
    euclidean_weight,
    residue,
    valuation2,
)


def vec(m, *xs):
    return RingVector.of(m, xs)


@st.composite
def vectors(draw, m=None, n=None, count=1):
    m = draw(st.integers(1, 4)) if m is None else m
    n = draw(st.integers(1, 6)) if n is None else n
    q = 1 << m
    out = [vec(m, *draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))) for _ in range(count)]
    return out


def test_ring_params_bounds():
    assert RingParams(3).modulus == 8 and RingParams(3).half == 4
    for bad in (0, 17, 2.0):
        with pytest.raises(ValueError):
            RingParams(bad)


def test_components_are_reduced():
    assert vec(2, 5, -1, 4).components == (1, 3, 0)


def test_empty_vector_rejected():
    with pytest.raises(ValueError):
        RingVector.of(2, [])


def test_parse_literal():
    assert RingVector.parse("1,0,3", RingParams(2)).components == (1, 0, 3)
    with pytest.raises(ValueError):
        RingVector.parse("1,x", RingParams(2))


def test_dot_examples():
    assert dot(vec(2, 1, 2, 3), vec(2, 1, 2, 3)) == 2
    assert dot(vec(3, 5, 7), vec(3, 0, 0)) == 0
    assert dot(vec(1, 1, 0), vec(1, 0, 1)) == 0


def test_dot_rejects_mismatch():
    with pytest.raises(DimensionError):
        dot(vec(2, 1, 1), vec(2, 1))
    with pytest.raises(DimensionError):
        dot(vec(2, 1, 1), vec(3, 1, 1))


def test_euclidean_weight_examples():
    assert euclidean_weight(vec(3, 5)) == 9
    assert euclidean_weight(vec(2, 2, 2)) == 8
    assert euclidean_weight(vec(4, 0, 0, 0)) == 0


def test_additive_order_examples():
    assert additive_order(vec(3, 2, 4)) == 4
    assert additive_order(vec(2, 2, 0)) == 2
    assert additive_order(vec(2, 0, 0)) == 1


def test_residue_examples():
    assert residue(7, 4) == 3
    assert residue(-1, 4) == 3
    assert residue(8, 2) == 0


def test_valuation_of_zero_is_m():
    assert valuation2(0, 3) == 3
    assert valuation2(12, 4) == 2


@given(vectors(count=3))
def test_dot_bilinear_and_symmetric(vs):
    u, v, w = vs
    q = u.params.modulus
    assert dot(u, v) == dot(v, u)
    assert dot(u + w, v) == (dot(u, v) + dot(w, v)) % q
    assert dot(3 * u, v) == (3 * dot(u, v)) % q


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_euclidean_weight_matches_norm_exhaustively(m, n):
    q = 1 << m
    for comps in itertools.product(range(q), repeat=n):
        v = vec(m, *comps)
        assert euclidean_weight(v) % q == dot(v, v)


@given(vectors())
def test_additive_order_is_exact(vs):
    (v,) = vs
    o = additive_order(v)
    assert (o * v).is_zero()
    if o > 1:
        assert not ((o // 2) * v).is_zero()


@given(st.integers(1, 6), st.integers(-100, 100))
def test_element_weight_symmetric(m, a):
    assert element_weight(a, m) == element_weight(-a, m)
