from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lyndonloop import ConfigurationError, GeneralizedOrder, WeightedOrder, build, parse_order
from lyndonloop.order import EQUAL, GREATER, LESS


def test_cmp_letters_examples():
    p = WeightedOrder((1, 2), (1, 1))
    assert p.cmp_letters((1, 1), (2, 0)) == LESS
    assert p.cmp_letters((1, 1), (2, 1)) == LESS
    assert p.cmp_letters((2, 1), (2, 1)) == EQUAL
    q = WeightedOrder((2, 1), (7, 8))
    assert q.cmp_letters((2, 7), (1, 6)) == LESS
    assert q.cmp_letters((1, 6), (2, 7)) == GREATER


def test_weighted_height():
    assert WeightedOrder((1, 2), (1, 1)).weighted_height((1, 1)) == 2
    assert WeightedOrder((5, 1, 3, 2, 4), (4, 3, 1, 8, 5)).weighted_height((1, 1, 1, 1, 1)) == 21
    g2 = build("G2")
    assert WeightedOrder((2, 1), (2, 3)).weighted_height(g2.theta) == 13


def test_windows():
    p = WeightedOrder((1, 2), (2, 3))
    assert p.window(1) == {1: (-2, 2), 2: (-3, 3)}
    assert p.window(0) == {1: (0, 0), 2: (0, 0)}
    with pytest.raises(ValueError):
        p.window(-1)


def test_generalized_marker_preimages():
    g = GeneralizedOrder((1, 2), (1, Fraction(1, 2)), (1, 1))
    n, pre = g.marker(1, 1)
    assert n == 1 and pre == (1, 2)
    assert g.marker(0, 1) == (0, (0, 0))
    ladder = g.ladder(3)
    for s in range(4):
        for sign in (1, -1):
            n, pre = ladder.marker(s, sign)
            assert all(g.rel(i, p) == n for i, p in enumerate(pre, start=1))
    assert [ladder.marker(s, 1)[0] for s in range(4)] == [0, 1, 2, 3]


def test_generalized_window_and_fingerprint():
    g = GeneralizedOrder((2, 1), (Fraction(3, 2), 1), (Fraction(1, 2), Fraction(1, 3)))
    win = g.window(1)
    assert win[1] == (-2, 2) and win[2] == (-3, 3)
    assert g.fingerprint() != GeneralizedOrder((1, 2), (Fraction(3, 2), 1), (Fraction(1, 2), Fraction(1, 3))).fingerprint()


def test_parse_order():
    assert parse_order("51324", 5) == (5, 1, 3, 2, 4)
    assert parse_order("5,1,3,2,4", 5) == (5, 1, 3, 2, 4)
    with pytest.raises(ConfigurationError):
        parse_order("112", 3)


@pytest.mark.parametrize("kwargs", [
    dict(index_order=(1, 2), weights=(1,)),
    dict(index_order=(1, 2), weights=(0, 1)),
    dict(index_order=(1, 3), weights=(1, 1)),
])
def test_bad_weighted_orders(kwargs):
    with pytest.raises(ConfigurationError):
        WeightedOrder(**kwargs)


def test_bad_slopes():
    with pytest.raises(ConfigurationError):
        GeneralizedOrder((1, 2), (1, 0), (1, 1))
    with pytest.raises(ConfigurationError):
        GeneralizedOrder((1, 2), (1, 1), (1,))


@st.composite
def weighted_orders(draw, max_rank=4):
    n = draw(st.integers(1, max_rank))
    order = draw(st.permutations(range(1, n + 1)))
    weights = draw(st.lists(st.integers(1, 9), min_size=n, max_size=n))
    return WeightedOrder(tuple(order), tuple(weights))


@st.composite
def generalized_orders(draw, max_rank=3):
    n = draw(st.integers(1, max_rank))
    order = draw(st.permutations(range(1, n + 1)))
    slope = st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4).filter(lambda x: x > 0)
    pos = draw(st.lists(slope, min_size=n, max_size=n))
    neg = draw(st.lists(slope, min_size=n, max_size=n))
    return GeneralizedOrder(tuple(order), tuple(pos), tuple(neg))


policies = st.one_of(weighted_orders(), generalized_orders())


def letters_for(policy):
    return st.tuples(st.integers(1, policy.rank), st.integers(-12, 12))


@given(policies.flatmap(lambda p: st.tuples(st.just(p), st.lists(letters_for(p), min_size=3, max_size=3))))
def test_letter_order_is_total(data):
    p, (a, b, c) = data
    ab, ba = p.cmp_letters(a, b), p.cmp_letters(b, a)
    assert ab == -ba
    assert (ab == EQUAL) == (a == b)
    if ab == LESS and p.cmp_letters(b, c) == LESS:
        assert p.cmp_letters(a, c) == LESS
    # the sort key realizes the same order
    assert (p.key(*a) < p.key(*b)) == (ab == LESS)


@given(weighted_orders().flatmap(lambda p: st.tuples(st.just(p), letters_for(p), letters_for(p), st.integers(-3, 3))))
def test_shift_compatibility(data):
    p, (i, d), (j, e), k = data
    c = p.weights
    assert p.cmp_letters((i, d), (j, e)) == p.cmp_letters((i, d + k * c[i - 1]), (j, e + k * c[j - 1]))


@given(policies.flatmap(lambda p: st.tuples(st.just(p), letters_for(p), letters_for(p))))
def test_larger_relative_exponent_is_smaller(data):
    p, (i, d), (j, e) = data
    if p.rel(i, d) > p.rel(j, e):
        assert p.cmp_letters((i, d), (j, e)) == LESS
