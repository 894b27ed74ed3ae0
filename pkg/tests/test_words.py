import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lyndonloop import (
    UnsupportedOperation,
    GeneralizedOrder,
    WeightedOrder,
    canonical_factorization,
    cmp_words,
    costandard_factorization,
    is_exponent_tight,
    is_lyndon,
    parse_word,
    render,
    upsilon,
)
from lyndonloop.order import EQUAL, GREATER, LESS
from lyndonloop.words import hdeg, is_lyndon_cyclic, to_json, vdeg, word_key

from conftest import engine, grid_engines, w

P11 = WeightedOrder((1, 2), (1, 1))


def test_render_and_parse_roundtrip():
    word = ((3, 1), (2, 0), (1, 0), (4, 1))
    assert render(word) == "[3^(1) 2^(0) 1^(0) 4^(1)]"
    assert parse_word(render(word)) == word
    assert parse_word("[3^{(1)} 2^{(-2)}]") == ((3, 1), (2, -2))
    assert to_json(word) == [[3, 1], [2, 0], [1, 0], [4, 1]]
    with pytest.raises(ValueError):
        parse_word("[]")


def test_degrees():
    word = w("[3^(1) 2^(0) 1^(0) 4^(1) 3^(-4)]")
    assert hdeg(word, 4) == (1, 1, 2, 1)
    assert vdeg(word) == -2


def test_cmp_words_examples():
    assert cmp_words(P11, w("[1^(0)]"), w("[1^(0) 2^(0)]")) == LESS
    assert cmp_words(P11, w("[2^(1) 1^(0)]"), w("[1^(1) 2^(0)]")) == GREATER
    assert cmp_words(P11, w("[2^(1) 1^(0)]"), w("[2^(1) 1^(0)]")) == EQUAL


def test_is_lyndon_examples():
    assert is_lyndon(P11, w("[2^(5)]"))
    assert is_lyndon(P11, w("[2^(1) 1^(0)]"))
    assert not is_lyndon(P11, w("[2^(0) 1^(0)]"))
    assert not is_lyndon(P11, ())


def test_costandard_examples():
    assert costandard_factorization(P11, w("[1^(0) 2^(0)]")) == (w("[1^(0)]"), w("[2^(0)]"))
    a4 = WeightedOrder((1, 2, 3, 4), (1, 1, 1, 1))
    assert costandard_factorization(a4, w("[3^(1) 2^(0) 1^(0) 4^(1)]")) == (w("[3^(1) 2^(0) 1^(0)]"), w("[4^(1)]"))
    g2 = WeightedOrder((2, 1), (2, 3))
    word = w("[2^(3) 1^(2) 2^(2) 2^(2) 1^(2)]")
    assert is_lyndon(g2, word)
    left, right = costandard_factorization(g2, word)
    assert left + right == word
    assert is_lyndon(g2, left) and is_lyndon(g2, right)
    assert right == w("[1^(2)]")


def test_costandard_rejects_letters():
    with pytest.raises(ValueError):
        costandard_factorization(P11, w("[1^(0)]"))


def test_canonical_examples():
    lyn = w("[2^(1) 1^(0)]")
    assert canonical_factorization(P11, lyn) == [lyn]
    assert canonical_factorization(P11, w("[2^(0) 1^(0)]")) == [w("[2^(0)]"), w("[1^(0)]")]
    assert canonical_factorization(P11, lyn + lyn) == [lyn, lyn]


def test_exponent_tight_examples():
    assert is_exponent_tight(P11, w("[1^(3)]"))
    a4 = WeightedOrder((1, 2, 3, 4), (1, 1, 1, 1))
    assert is_exponent_tight(a4, w("[4^(1) 3^(0) 2^(0) 1^(0)]"))
    assert is_exponent_tight(a4, w("[4^(1) 3^(0) 2^(0) 1^(0)]"), lyndon=True)
    assert not is_exponent_tight(P11, w("[1^(0) 2^(2)]"))


def test_upsilon():
    p = WeightedOrder((1, 2), (2, 3))
    word = w("[2^(1) 1^(0)]")
    assert upsilon(p, word, 0) == word
    assert upsilon(p, word, 1) == w("[2^(4) 1^(2)]")
    with pytest.raises(UnsupportedOperation):
        upsilon(GeneralizedOrder((1, 2), (1, 1), (1, 1)), word)


def _all_words(letters, max_len):
    for n in range(1, max_len + 1):
        yield from itertools.product(letters, repeat=n)


@pytest.mark.parametrize("policy", [P11, WeightedOrder((2, 1), (2, 3))])
def test_suffix_and_rotation_definitions_agree(policy):
    letters = [(1, 0), (1, 1), (2, 0), (2, -1)]
    for word in _all_words(letters, 6):
        assert is_lyndon(policy, word) == is_lyndon_cyclic(policy, word)


@st.composite
def small_words(draw, policy=P11):
    letters = st.tuples(st.integers(1, policy.rank), st.integers(-2, 2))
    return tuple(draw(st.lists(letters, min_size=1, max_size=8)))


@given(small_words())
def test_canonical_factorization_properties(word):
    factors = canonical_factorization(P11, word)
    assert tuple(x for f in factors for x in f) == word
    assert all(is_lyndon(P11, f) for f in factors)
    keys = [word_key(P11, f) for f in factors]
    assert all(a >= b for a, b in zip(keys, keys[1:]))


@given(small_words())
def test_costandard_concatenates_back(word):
    if len(word) < 2 or not is_lyndon(P11, word):
        return
    left, right = costandard_factorization(P11, word)
    assert left + right == word
    assert is_lyndon(P11, left) and is_lyndon(P11, right)


@given(small_words(), st.randoms(use_true_random=False))
def test_tightness_depends_on_multiset_only(word, rng):
    shuffled = list(word)
    rng.shuffle(shuffled)
    assert is_exponent_tight(P11, word) == is_exponent_tight(P11, tuple(shuffled))


@given(small_words(), small_words(), st.integers(-3, 3))
def test_upsilon_preserves_order(u, v, k):
    p = WeightedOrder((2, 1), (2, 3))
    assert cmp_words(p, u, v) == cmp_words(p, upsilon(p, u, k), upsilon(p, v, k))


def _standard_words(eng, span=3):
    return [eng.fast_word(a, d) for a in eng.sys.positive_roots for d in range(-span, span + 1)]


@pytest.mark.parametrize("eng", [engine("A", 3, (2, 1, 3), (2, 1, 3)), engine("G2", None, (2, 1), (2, 3))],
                         ids=["A3", "G2"])
def test_concatenation_of_increasing_lyndon_words(eng):
    pol = eng.policy
    words = _standard_words(eng)
    for l1 in words:
        for l2 in words:
            if word_key(pol, l1) < word_key(pol, l2):
                assert is_lyndon(pol, l1 + l2)
                assert word_key(pol, l1 + l2) < word_key(pol, l2 + l1)


def test_grid_words_are_lyndon():
    for _, eng in grid_engines():
        for word in _standard_words(eng, 2):
            assert is_lyndon(eng.policy, word)
