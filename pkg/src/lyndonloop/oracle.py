"""Definition-level oracle for standard Lyndon loop words.

Every graded piece ``(alpha, d)`` of the loop algebra ``L n+`` is one
dimensional, so the standard Lyndon word of that degree is the
lexicographically largest Lyndon word whose standard bracketing does not
vanish.

Vanishing is decided by root sums alone.  The bracketing of a Lyndon word is
built from its costandard factorization, and by induction every node of the
tree evaluates to a multiple of one root vector ``e_g^(k)``.  Bracketing
``e_g1^(k1)`` with ``e_g2^(k2)`` gives a nonzero multiple of
``e_{g1+g2}^(k1+k2)`` exactly when ``g1 + g2`` is a root (structure constants
``N_{g1,g2}`` of a simple Lie algebra never vanish then), and zero otherwise.
No sums of root vectors ever appear, so signs and magnitudes are irrelevant.

The search runs over a finite window of letters ``I^(s)``.
"""
from __future__ import annotations

from itertools import combinations_with_replacement

from .order import OrderPolicy
from .rootsys import RootSystem
from .words import costandard_factorization, is_lyndon, word_key

__all__ = [
    "WindowExhausted",
    "bracket_nonzero",
    "bracket_tree",
    "enumerate_lyndon",
    "oracle_word",
]


class WindowExhausted(LookupError):
    """No Lyndon word with a nonvanishing bracketing exists inside the letter window."""


def bracket_tree(policy: OrderPolicy, w):
    """Standard bracketing as nested pairs; leaves are letters."""
    if len(w) == 1:
        return w[0]
    left, right = costandard_factorization(policy, w)
    return (bracket_tree(policy, left), bracket_tree(policy, right))


def _tree_degree(sys: RootSystem, tree):
    """``(hdeg, vdeg)`` of a bracket tree, or ``None`` if some node vanishes."""
    if isinstance(tree[0], int):
        i, d = tree
        return sys.simple(i), d
    left = _tree_degree(sys, tree[0])
    if left is None:
        return None
    right = _tree_degree(sys, tree[1])
    if right is None:
        return None
    total = sys.add(left[0], right[0])
    if total is None:
        return None
    return total, left[1] + right[1]


def bracket_nonzero(sys: RootSystem, policy: OrderPolicy, w) -> bool:
    if not is_lyndon(policy, w):
        raise ValueError("bracketing is defined for Lyndon words only")
    return _tree_degree(sys, bracket_tree(policy, w)) is not None


def _distinct_arrangements(counts: dict, prefix: list, n: int):
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for letter in sorted(counts):
        if counts[letter]:
            counts[letter] -= 1
            prefix.append(letter)
            yield from _distinct_arrangements(counts, prefix, n)
            prefix.pop()
            counts[letter] += 1


def _exponent_choices(k: int, lo: int, hi: int):
    return combinations_with_replacement(range(lo, hi + 1), k)


def enumerate_lyndon(sys: RootSystem, policy: OrderPolicy, alpha, d: int, s: int):
    """All Lyndon loop words of degree ``(alpha, d)`` over ``I^(s)``, each once.

    Multisets of letters are produced first; a Lyndon word of length > 1 starts
    with its smallest letter, so only arrangements starting there are tried.
    """
    window = policy.window(s)
    nodes = [(i, k) for i, k in enumerate(alpha, start=1) if k]
    n = sum(alpha)
    key = policy.key

    def assign(idx, remaining, chosen):
        if idx == len(nodes):
            if remaining == 0:
                yield list(chosen)
            return
        i, k = nodes[idx]
        lo, hi = window[i]
        rest_lo = sum(kk * window[j][0] for j, kk in nodes[idx + 1:])
        rest_hi = sum(kk * window[j][1] for j, kk in nodes[idx + 1:])
        for exps in _exponent_choices(k, lo, hi):
            t = sum(exps)
            if rest_lo <= remaining - t <= rest_hi:
                chosen.extend((i, e) for e in exps)
                yield from assign(idx + 1, remaining - t, chosen)
                del chosen[len(chosen) - k:]

    for letters in assign(0, d, []):
        first = min(letters, key=lambda x: key(*x))
        counts: dict = {}
        for x in letters:
            counts[x] = counts.get(x, 0) + 1
        counts[first] -= 1
        for tail in _distinct_arrangements(counts, [first], n):
            if is_lyndon(policy, tail):
                yield tail


def oracle_word(sys: RootSystem, policy: OrderPolicy, alpha, d: int, s: int):
    """Largest Lyndon word of degree ``(alpha, d)`` over ``I^(s)`` with nonzero bracketing.

    Equivalent to ``max`` over :func:`enumerate_lyndon` filtered by
    :func:`bracket_nonzero`, but searches words in decreasing lexicographic
    order and stops at the first hit.
    """
    alpha = tuple(alpha)
    window = policy.window(s)
    key = policy.key
    nodes = [i for i, k in enumerate(alpha, start=1) if k]
    n = sum(alpha)
    letters_desc = sorted(((i, e) for i in nodes for e in range(window[i][0], window[i][1] + 1)),
                          key=lambda x: key(*x), reverse=True)

    if n == 1:
        i = nodes[0]
        if window[i][0] <= d <= window[i][1]:
            return ((i, d),)
        raise WindowExhausted(f"no word of degree {alpha}, {d} in window s={s}")

    counts = {i: k for i, k in enumerate(alpha, start=1) if k}

    for first in letters_desc:
        fkey = key(*first)
        # letters allowed after the first one: not smaller than it
        allowed = [x for x in letters_desc if key(*x) >= fkey]
        span = {}
        for i, e in allowed:
            lo, hi = span.get(i, (e, e))
            span[i] = (min(lo, e), max(hi, e))
        remaining = dict(counts)
        remaining[first[0]] -= 1
        if any(remaining[i] and i not in span for i in remaining):
            continue
        rest = d - first[1]
        if not _feasible(remaining, rest, span):
            continue
        prefix = [first]
        hit = _search(sys, policy, prefix, remaining, rest, allowed, span, n)
        if hit is not None:
            return hit
    raise WindowExhausted(f"no standard Lyndon word of degree {alpha}, {d} in window s={s}")


def _feasible(remaining, rest, span) -> bool:
    lo = sum(k * span[i][0] for i, k in remaining.items() if k)
    hi = sum(k * span[i][1] for i, k in remaining.items() if k)
    return lo <= rest <= hi


def _search(sys, policy, prefix, remaining, rest, allowed, span, n):
    if len(prefix) == n:
        w = tuple(prefix)
        if rest == 0 and is_lyndon(policy, w) and _tree_degree(sys, bracket_tree(policy, w)) is not None:
            return w
        return None
    for letter in allowed:
        i, e = letter
        if not remaining.get(i):
            continue
        remaining[i] -= 1
        if _feasible(remaining, rest - e, span):
            prefix.append(letter)
            hit = _search(sys, policy, prefix, remaining, rest - e, allowed, span, n)
            prefix.pop()
            if hit is not None:
                remaining[i] += 1
                return hit
        remaining[i] += 1
    return None


def oracle_max_by_enumeration(sys: RootSystem, policy: OrderPolicy, alpha, d: int, s: int):
    """Reference implementation: full enumeration, then the maximum."""
    best, best_key = None, None
    for w in enumerate_lyndon(sys, policy, alpha, d, s):
        if _tree_degree(sys, bracket_tree(policy, w)) is None:
            continue
        k = word_key(policy, w)
        if best_key is None or k > best_key:
            best, best_key = w, k
    if best is None:
        raise WindowExhausted(f"no standard Lyndon word of degree {alpha}, {d} in window s={s}")
    return best
