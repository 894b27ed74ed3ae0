"""Loop words and the classical Lyndon machinery under an order policy.

A letter is a pair ``(i, d)`` standing for ``i^(d)``; a loop word is a tuple
of letters.  Every comparison goes through the policy's ``key``, which turns
the letter order into plain tuple order, so Python's tuple comparison is the
lexicographic order with "proper prefix is smaller".
"""
from __future__ import annotations

import re
from collections import Counter

from .order import EQUAL, GREATER, LESS, OrderPolicy, UnsupportedOperation

__all__ = [
    "canonical_factorization",
    "cmp_words",
    "costandard_factorization",
    "hdeg",
    "is_exponent_tight",
    "is_lyndon",
    "letter_multiset",
    "parse_word",
    "render",
    "upsilon",
    "vdeg",
    "word_key",
]

Letter = tuple  # (node, exponent)


def word_key(policy: OrderPolicy, w) -> tuple:
    key = policy.key
    return tuple(key(i, d) for i, d in w)


def cmp_words(policy: OrderPolicy, u, v) -> int:
    for a, b in zip(u, v):
        c = policy.cmp_letters(a, b)
        if c != EQUAL:
            return c
    if len(u) == len(v):
        return EQUAL
    return LESS if len(u) < len(v) else GREATER


def is_lyndon(policy: OrderPolicy, w) -> bool:
    """True iff ``w`` is nonempty and strictly smaller than each proper suffix."""
    if not w:
        return False
    k = word_key(policy, w)
    return all(k < k[a:] for a in range(1, len(k)))


def is_lyndon_cyclic(policy: OrderPolicy, w) -> bool:
    """Cyclic definition: ``w`` is strictly smaller than all its nontrivial rotations."""
    if not w:
        return False
    k = word_key(policy, w)
    return all(k < k[a:] + k[:a] for a in range(1, len(k)))


def costandard_factorization(policy: OrderPolicy, w) -> tuple[tuple, tuple]:
    """Split a Lyndon word at its longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("costandard factorization needs a word of length >= 2")
    k = word_key(policy, w)
    for a in range(1, len(w)):
        suffix = k[a:]
        if all(suffix < suffix[b:] for b in range(1, len(suffix))):
            return tuple(w[:a]), tuple(w[a:])
    raise AssertionError("unreachable: the last letter is always Lyndon")


def canonical_factorization(policy: OrderPolicy, w) -> list[tuple]:
    """Duval's algorithm: ``w = l_1 ... l_k`` with Lyndon ``l_1 >= ... >= l_k``."""
    k = word_key(policy, w)
    n = len(k)
    out = []
    i = 0
    while i < n:
        j, m = i + 1, i
        while j < n and k[m] <= k[j]:
            m = i if k[m] < k[j] else m + 1
            j += 1
        while i <= m:
            out.append(tuple(w[i:i + j - m]))
            i += j - m
    return out


def is_exponent_tight(policy: OrderPolicy, w, lyndon: bool = False) -> bool:
    """Check ``i_k^(d_k) >= i_r^(d_r + 1)`` for all ``k, r``.

    With ``lyndon=True`` only ``k = 1`` is checked, which suffices for Lyndon
    words because the first letter is then the smallest.
    """
    if not w:
        return True
    key = policy.key
    lifted = max(key(i, d + 1) for i, d in w)
    low = key(*w[0]) if lyndon else min(key(i, d) for i, d in w)
    return low >= lifted


def upsilon(policy: OrderPolicy, w, k: int = 1) -> tuple:
    """Shift every letter ``i^(d)`` to ``i^(d + k c_i)`` (weighted policies only)."""
    if not policy.is_weighted:
        raise UnsupportedOperation("the periodicity shift exists only for weighted orders")
    c = policy.weights
    return tuple((i, d + k * c[i - 1]) for i, d in w)


def hdeg(w, rank: int) -> tuple[int, ...]:
    out = [0] * rank
    for i, _ in w:
        out[i - 1] += 1
    return tuple(out)


def vdeg(w) -> int:
    return sum(d for _, d in w)


def letter_multiset(w) -> Counter:
    return Counter(w)


def render(w) -> str:
    """Bracket notation, e.g. ``[3^(1) 2^(0) 1^(0) 4^(1)]``."""
    return "[" + " ".join(f"{i}^({d})" for i, d in w) + "]"


_LETTER = re.compile(r"(\d+)\s*\^\s*\{?\s*\(\s*(-?\d+)\s*\)\s*\}?")


def parse_word(text: str) -> tuple:
    """Inverse of :func:`render`; also accepts the TeX form ``3^{(1)}``."""
    letters = tuple((int(i), int(d)) for i, d in _LETTER.findall(text))
    if not letters:
        raise ValueError(f"no loop letters in {text!r}")
    return letters


def to_json(w) -> list[list[int]]:
    return [[i, d] for i, d in w]
