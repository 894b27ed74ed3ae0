from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lyndonloop import Engine, GeneralizedOrder, UnsupportedOperation, WeightedOrder, build, compute_word, render
from lyndonloop.words import is_exponent_tight, upsilon

from conftest import engine, w


def test_finite_words():
    a4 = engine("A", 4)
    assert a4.finite_word((0, 0, 1, 0)) == w("[3^(0)]")
    assert a4.finite_word(a4.sys.theta) == w("[1^(0) 2^(0) 3^(0) 4^(0)]")
    assert engine("A", 2).finite_word((1, 1)) == w("[1^(0) 2^(0)]")


def test_multiset_chain_steps():
    a4 = engine("A", 4)
    theta = a4.sys.theta
    assert a4.multiset_chain(theta, 0) == {(1, 0): 1, (2, 0): 1, (3, 0): 1, (4, 0): 1}
    assert a4.multiset_chain(theta, 1) == {(4, 1): 1, (3, 0): 1, (2, 0): 1, (1, 0): 1}
    assert a4.multiset_chain(theta, 2) == {(3, 1): 1, (4, 1): 1, (2, 0): 1, (1, 0): 1}


@pytest.mark.parametrize("typ,rank,order,weights,d,expected", [
    ("A", 4, (1, 2, 3, 4), (1, 1, 1, 1), 2, "[3^(1) 2^(0) 1^(0) 4^(1)]"),
    ("A", 5, (5, 1, 3, 2, 4), (4, 3, 1, 8, 5), 20, "[1^(4) 2^(3) 3^(1) 4^(8) 5^(4)]"),
    ("B", 2, (2, 1), (7, 8), 19, "[2^(7) 1^(6) 2^(6)]"),
    ("A", 2, (1, 2), (1, 1), 1, "[2^(1) 1^(0)]"),
])
def test_compute_word_examples(typ, rank, order, weights, d, expected):
    sys_ = build(typ, rank)
    policy = WeightedOrder(order, weights)
    for eng in ("fast", "naive"):
        assert render(compute_word(sys_, policy, sys_.theta, d, eng)) == expected


def test_is_standard():
    a2 = engine("A", 2)
    assert a2.is_standard(a2.fast_word((1, 1), 1))
    assert a2.is_standard(w("[1^(0) 1^(0)]"))
    assert not a2.is_standard(w("[1^(1) 2^(0)]"))
    assert a2.is_standard(())


def test_memo_contract():
    eng = engine("C", 3, (3, 1, 2), (1, 2, 3))
    for a in eng.sys.positive_roots:
        for d in range(-6, 12):
            eng.fast_word(a, d)
    eng.check_memo()
    table = eng.memo_table()
    assert table and all(sum(ms.values()) == len(word) for word, ms in table.values())


def test_rejects_non_roots_and_unknown_engines():
    a2 = engine("A", 2)
    with pytest.raises(ValueError):
        a2.fast_word((2, 1), 0)
    with pytest.raises(ValueError):
        a2.word((1, 1), 0, engine="other")
    with pytest.raises(ValueError):
        Engine(build("A", 3), WeightedOrder((1, 2), (1, 1)))


def test_generalized_mode_limits():
    eng = Engine(build("A", 2), GeneralizedOrder((1, 2), (1, Fraction(1, 2)), (2, 1)))
    with pytest.raises(UnsupportedOperation):
        eng.naive_word((1, 1), 1)
    with pytest.raises(UnsupportedOperation):
        eng.f((1, 1))
    assert eng.word((1, 1), 3, "oracle") == eng.word((1, 1), 3)


def test_subwords_of_standard_words_are_standard():
    eng = engine("B", 3, (2, 1, 3), (1, 2, 1))
    for a in eng.sys.positive_roots:
        for d in range(-4, 5):
            word = eng.fast_word(a, d)
            for i in range(len(word)):
                for j in range(i + 1, len(word) + 1):
                    assert eng.is_standard(word[i:j])


# -- random configurations ----------------------------------------------------------

SYSTEMS = [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G2", None), ("B", 3)]


@st.composite
def configs(draw):
    typ, rank = draw(st.sampled_from(SYSTEMS))
    sys_ = build(typ, rank)
    n = sys_.rank
    order = tuple(draw(st.permutations(range(1, n + 1))))
    weights = tuple(draw(st.lists(st.integers(1, 5), min_size=n, max_size=n)))
    alpha = draw(st.sampled_from(sys_.positive_roots))
    d = draw(st.integers(-15, 15))
    return Engine(sys_, WeightedOrder(order, weights)), alpha, d


@settings(max_examples=150, deadline=None)
@given(configs())
def test_random_words_tight_monotone_periodic(cfg):
    eng, alpha, d = cfg
    pol = eng.policy
    word = eng.fast_word(alpha, d)
    assert is_exponent_tight(pol, word)
    assert sum(e for _, e in word) == d
    assert eng.key(word) < eng.key(eng.fast_word(alpha, d - 1))
    assert eng.fast_word(alpha, d + eng.f(alpha)) == upsilon(pol, word)
    assert (word[0][1] > 0) if d > 0 else (word[0][1] <= 0)
    assert sorted(word) == list(eng.multiset(alpha, d))


@settings(max_examples=80, deadline=None)
@given(configs())
def test_random_fast_equals_naive(cfg):
    eng, alpha, d = cfg
    assert eng.fast_word(alpha, d) == eng.naive_word(alpha, d)
