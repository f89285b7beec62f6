import random

import pytest
from hypothesis import given, strategies as st

from oracles import cwe_counter, span
from shadowcodes.builder import applicable_variants, extend, recipe_for
from shadowcodes.cwe import (
    WeightEnumerator,
    check_formula,
    coset_enumerators,
    cwe_equal,
    cwe_formula,
    cwe_of_code,
)
from shadowcodes.lincode import canonicalize, full_space, zero_code
from shadowcodes.shadow import GeneralizedShadow, InvalidShadowVector, decompose, find_generalized_s
from shadowcodes.zring import RingParams


def code(m, rows, n=None):
    return canonicalize(RingParams(m), rows, n)


def we(m, n, terms):
    return WeightEnumerator(RingParams(m), n, terms)


def test_direct_examples():
    assert cwe_of_code(code(1, [(1, 1)])).terms == {(2, 0): 1, (0, 2): 1}
    assert cwe_of_code(code(2, [(2,)])).terms == {(1, 0, 0, 0): 1, (0, 0, 1, 0): 1}
    assert cwe_of_code(zero_code(RingParams(3), 5)).terms == {(5, 0, 0, 0, 0, 0, 0, 0): 1}


def test_str_and_json_are_sorted():
    w = cwe_of_code(code(1, [(1, 1)]))
    assert str(w) == "X1^2 + X0^2"
    data = w.to_json()
    assert data == {"m": 1, "n": 2, "terms": [{"exp": [0, 2], "count": 1}, {"exp": [2, 0], "count": 1}]}
    assert WeightEnumerator.from_json(data) == w


def test_rejects_bad_exponent():
    with pytest.raises(ValueError):
        we(1, 2, {(1, 0): 1})


def test_equal_and_diff():
    a = we(1, 2, {(2, 0): 1, (0, 2): 1})
    assert cwe_equal(a, a).equal
    b = we(1, 2, {(2, 0): 1})
    c = we(1, 2, {(1, 1): 1})
    diff = cwe_equal(b, c)
    assert not diff.equal
    assert diff.only_left == {(2, 0): 1} and diff.only_right == {(1, 1): 1}
    with pytest.raises(ValueError):
        cwe_equal(a, we(1, 1, {(1, 0): 1}))


@st.composite
def random_codes(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 4))
    q = 1 << m
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), max_size=3))
    return m, n, rows


@given(random_codes())
def test_direct_matches_counter_oracle(data):
    m, n, rows = data
    c = code(m, rows, n)
    w = cwe_of_code(c)
    assert w.terms == cwe_counter(span(rows, n, m), m)
    assert w.total == c.size
    assert all(sum(e) == n for e in w.terms)


@given(random_codes())
def test_negation_symmetry(data):
    m, n, rows = data
    w = cwe_of_code(code(m, rows, n))
    assert w.negated() == w


@given(random_codes())
def test_evaluation_at_ones_counts_codewords(data):
    m, n, rows = data
    c = code(m, rows, n)
    assert cwe_of_code(c).evaluate([1] * (1 << m)) == c.size


def test_hamming_histogram_of_full_space():
    w = cwe_of_code(full_space(RingParams(1), 3))
    assert w.hamming_histogram() == {0: 1, 1: 3, 2: 3, 3: 1}


def _decs(seed_codes):
    for name, c in seed_codes.items():
        yield name, decompose(c)
        rng = random.Random(0)
        for square in (0, c.params.half):
            try:
                yield name, decompose(c, GeneralizedShadow(find_generalized_s(c, rng, square=square)))
            except InvalidShadowVector:
                pass


def test_coset_enumerators_sum_to_c0_dual(seed_codes):
    for name, dec in _decs(seed_codes):
        parts = coset_enumerators(dec)
        total = {}
        for p in parts:
            for e, c in p.terms.items():
                total[e] = total.get(e, 0) + c
        assert total == cwe_of_code(dec.c0_dual).terms, name


def test_formula_binary_pair():
    dec = decompose(code(1, [(1, 1)]))
    r = recipe_for(dec, "a")
    cert = extend(dec, r)
    printed = cwe_formula(dec, r, "printed")
    assert printed == cwe_of_code(cert.code)
    assert printed.terms == {(4, 0): 1, (2, 2): 2, (0, 4): 1}


def test_printed_subscript_reduces_mod_q():
    dec = decompose(code(2, [(2, 0), (0, 2)]))
    r = recipe_for(dec, "a")
    pf = r.printed_formula()
    point = tuple(4 if v == "i" else 2 for v in pf.variables)
    assert pf.subscripts(point, 4)[0] == 0


def test_unknown_source_rejected():
    dec = decompose(code(1, [(1, 1)]))
    with pytest.raises(ValueError):
        cwe_formula(dec, recipe_for(dec, "a"), "guess")


def test_formulas_agree_wherever_the_construction_is_self_dual(seed_codes):
    checked = 0
    for name, dec in _decs(seed_codes):
        for v in applicable_variants(dec):
            r = recipe_for(dec, v)
            cert = extend(dec, r)
            if not cert.passed or cert.code.size > 1 << 16:
                continue
            fc = check_formula(dec, r, cert.code)
            assert fc.printed.equal and fc.vectors.equal, (name, r.label, fc.to_json())
            checked += 1
    assert checked >= 20


def test_formula_mismatch_reports_diff(seed_codes):
    dec = decompose(seed_codes["z4_n4_k4"])
    r = recipe_for(dec, "a")
    cert = extend(dec, r)
    fc = check_formula(dec, r, cert.code)
    assert not fc.passed
    report = fc.to_json()
    assert report["printed_diff"]["mismatched_terms"] > 0
    # the formula sums over every index tuple, so it counts twice as many vectors as C' holds
    assert cwe_formula(dec, r, "vectors").total == 2 * cert.code.size
