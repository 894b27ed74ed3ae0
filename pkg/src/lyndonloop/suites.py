"""Verification suites over one root system and one order.

Each suite yields :class:`Check` records; a suite passes when every record is
ok.  The CLI ``verify`` command and the test-suite share these.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .leclerc import Engine
from .oracle import oracle_word
from .order import GeneralizedOrder, WeightedOrder
from .rootsys import RootSystem
from .typea import bcd_multiset, build_table, closed_form_word
from .weyl import (
    NotReducedOrder,
    InvariantViolation,
    beta_sequence,
    extract_reduced_word,
    l_block,
    terminal_segment,
    terminal_set_by_action,
    translation_length,
    translation_terminal_set,
)
from .words import canonical_factorization, is_exponent_tight, is_lyndon, render, upsilon

SUITES = ("tightness", "convexity", "periodicity", "monotonicity", "oracle", "weyl", "typea", "generalized")


@dataclass(frozen=True)
class Check:
    suite: str
    instance: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail and not self.ok else ""
        return f"{status} {self.suite} {self.instance}{tail}"


def _fmt(alpha, d) -> str:
    return f"({','.join(map(str, alpha))};{d})"


def default_range(engine: Engine, alpha) -> range:
    """``[-f(alpha), 2 f(alpha)]`` for weighted orders, ``[-4, 6]`` otherwise."""
    if engine.policy.is_weighted:
        f = engine.f(alpha)
        return range(-f, 2 * f + 1)
    return range(-4, 7)


def _ranges(engine, d_range):
    for alpha in engine.sys.positive_roots:
        yield alpha, (d_range if d_range is not None else default_range(engine, alpha))


# -- single-word properties ------------------------------------------------------


def tightness(engine: Engine, d_range=None) -> Iterator[Check]:
    """Tightness, the first-letter sign rule and agreement with the finite word at ``d = 0``."""
    pol = engine.policy
    for alpha, ds in _ranges(engine, d_range):
        finite = engine.finite_word(alpha)
        for d in ds:
            w = engine.fast_word(alpha, d)
            inst = _fmt(alpha, d)
            yield Check("tightness", inst, is_exponent_tight(pol, w) and is_lyndon(pol, w), render(w))
            first = w[0][1]
            yield Check("first-letter", inst, first > 0 if d > 0 else first <= 0, render(w))
            if d == 0:
                yield Check("finite", inst, w == finite, f"{render(w)} vs {render(finite)}")


def monotonicity(engine: Engine, d_range=None) -> Iterator[Check]:
    for alpha, ds in _ranges(engine, d_range):
        for d in ds:
            lo, hi = engine.fast_word(alpha, d), engine.fast_word(alpha, d - 1)
            yield Check("monotonicity", _fmt(alpha, d), engine.key(lo) < engine.key(hi),
                        f"{render(lo)} !< {render(hi)}")


def periodicity(engine: Engine, d_range=None) -> Iterator[Check]:
    pol = engine.policy
    if not pol.is_weighted:
        return
    for alpha, ds in _ranges(engine, d_range):
        f = engine.f(alpha)
        for d in ds:
            w, shifted = engine.fast_word(alpha, d), engine.fast_word(alpha, d + f)
            naive_ok = engine.naive_word(alpha, d + f) == shifted
            yield Check("periodicity", _fmt(alpha, d), shifted == upsilon(pol, w) and naive_ok,
                        f"{render(shifted)} vs {render(upsilon(pol, w))}")


def convexity(engine: Engine, d_range=None) -> Iterator[Check]:
    """``l(a,d) < l(a+b,d+e) < l(b,e)`` on every triple inside the grid."""
    sys = engine.sys
    cells = [(a, d) for a, ds in _ranges(engine, d_range) for d in ds]
    for a, d in cells:
        wa = engine.key(engine.fast_word(a, d))
        for b, e in cells:
            total = sys.add(a, b)
            if total is None:
                continue
            wb = engine.key(engine.fast_word(b, e))
            if not wa < wb:
                continue
            mid = engine.key(engine.fast_word(total, d + e))
            yield Check("convexity", f"{_fmt(a, d)}+{_fmt(b, e)}", wa < mid < wb)


def minimality(engine: Engine, d_range=None) -> Iterator[Check]:
    """No standard pair fits strictly between the factors of a standard concatenation."""
    sys = engine.sys
    cells = [(a, d) for a, ds in _ranges(engine, d_range) for d in ds]
    spread = {a: (min(ds), max(ds)) for a, ds in _ranges(engine, d_range)}
    for a, d in cells:
        w1 = engine.fast_word(a, d)
        k1 = engine.key(w1)
        for b, e in cells:
            total = sys.add(a, b)
            if total is None:
                continue
            w2 = engine.fast_word(b, e)
            k2 = engine.key(w2)
            if not k1 < k2 or engine.fast_word(total, d + e) != w1 + w2:
                continue
            clash = None
            for g1, g2 in sys.splittings[total]:
                lo, hi = spread[g1]
                for d1 in range(lo, hi + 1):
                    m1 = engine.key(engine.fast_word(g1, d1))
                    if not k1 < m1 < k2:
                        continue
                    m2 = engine.key(engine.fast_word(g2, d + e - d1))
                    if m1 < m2 < k2:
                        clash = (g1, d1, g2, d + e - d1)
                        break
                if clash:
                    break
            yield Check("minimality", f"{_fmt(a, d)}+{_fmt(b, e)}", clash is None, str(clash))


def _random_decomposition(rng: random.Random, sys: RootSystem, vector, total_d: int, spread: int):
    remaining = list(vector)
    parts = []
    while any(remaining):
        fits = [r for r in sys.positive_roots if all(x <= y for x, y in zip(r, remaining))]
        root = rng.choice(fits)
        parts.append(root)
        remaining = [y - x for x, y in zip(root, remaining)]
    degrees = [rng.randint(-spread, spread) for _ in parts]
    degrees[-1] += total_d - sum(degrees)
    return list(zip(parts, degrees))


def several_summands(engine: Engine, samples: int = 1000, seed: int = 0, spread: int = 4) -> Iterator[Check]:
    """``min`` of one decomposition never exceeds ``max`` of another of equal degree."""
    sys = engine.sys
    rng = random.Random(seed)
    for t in range(samples):
        alpha = rng.choice(sys.positive_roots)
        beta = rng.choice(sys.positive_roots)
        vector = tuple(x + y for x, y in zip(alpha, beta))
        total_d = rng.randint(-2 * spread, 2 * spread)
        left = _random_decomposition(rng, sys, vector, total_d, spread)
        right = _random_decomposition(rng, sys, vector, total_d, spread)
        lk = [engine.key(engine.fast_word(g, d)) for g, d in left]
        rk = [engine.key(engine.fast_word(g, d)) for g, d in right]
        ok = min(lk) <= max(rk) and min(rk) <= max(lk)
        yield Check("several-summands", f"#{t}", ok, f"{left} | {right}")


def standardness(engine: Engine, d_range=None) -> Iterator[Check]:
    """Products of standard words in non-increasing order are standard, per canonical factors."""
    for alpha, ds in _ranges(engine, d_range):
        for d in ds:
            w = engine.fast_word(alpha, d)
            ok = engine.is_standard(w) and canonical_factorization(engine.policy, w) == [w]
            yield Check("standard", _fmt(alpha, d), ok)


# -- cross-engine checks ----------------------------------------------------------


def oracle(engine: Engine, d_range=None, s: int = 3) -> Iterator[Check]:
    """Oracle = Fast = Naive on every query representable inside the window ``I^(s)``."""
    pol = engine.policy
    for alpha, ds in _ranges(engine, d_range):
        for d in ds:
            if pol.window_for(alpha, d) > s:
                continue
            fast = engine.fast_word(alpha, d)
            brute = oracle_word(engine.sys, pol, alpha, d, s)
            ok = brute == fast
            if pol.is_weighted:
                ok = ok and engine.naive_word(alpha, d) == fast
            yield Check("oracle", _fmt(alpha, d), ok, f"oracle {render(brute)} fast {render(fast)}")


def stabilization(engine: Engine, d_range=None, s: int = 2) -> Iterator[Check]:
    pol = engine.policy
    for alpha, ds in _ranges(engine, d_range):
        for d in ds:
            if pol.window_for(alpha, d) > s:
                continue
            a = oracle_word(engine.sys, pol, alpha, d, s)
            b = oracle_word(engine.sys, pol, alpha, d, s + 1)
            yield Check("stabilization", _fmt(alpha, d), a == b)


# -- affine Weyl group --------------------------------------------------------------


def weyl(engine: Engine, count: int = 200, mu_samples: int = 20, seed: int = 0,
         d_max: int | None = None) -> Iterator[Check]:
    sys, pol = engine.sys, engine.policy
    seq = beta_sequence(engine, -count + 1, 0)
    keys = [engine.key(engine.fast_word(r.lam, -r.level)) for r in seq]
    yield Check("weyl-beta", f"first {count}", all(x < y for x, y in zip(keys, keys[1:])))

    block = l_block(engine)
    try:
        word = extract_reduced_word(sys, block)
        top = max(r.level for r in block) + 2
        ok = terminal_set_by_action(sys, word, top) == set(block) == translation_terminal_set(sys, pol.weights)
        yield Check("weyl-block", f"length {len(block)}", ok and len(word) == len(block))
    except NotReducedOrder as exc:
        yield Check("weyl-block", f"length {len(block)}", False, str(exc))

    if d_max is None:
        d_max = 3 * max(pol.weights)
    for i in range(1, sys.rank + 1):
        for d in range(d_max + 1):
            inst = f"segment({i},{d})"
            try:
                seg = terminal_segment(engine, i, d)
                word = extract_reduced_word(sys, seg)
            except (NotReducedOrder, InvariantViolation) as exc:
                yield Check("weyl-segment", inst, False, str(exc))
                continue
            ok = len(word) == len(seg)
            if seg and i == pol.index_order[0]:
                # the action check is quadratic in the word length, so sample it
                ok = ok and terminal_set_by_action(sys, word, max(r.level for r in seg) + 2) == set(seg)
            yield Check("weyl-segment", inst, ok)

    rng = random.Random(seed)
    for _ in range(mu_samples):
        mu = tuple(rng.randint(1, 4) for _ in range(sys.rank))
        size = len(translation_terminal_set(sys, mu))
        yield Check("weyl-length", f"mu={mu}", size == translation_length(sys, mu))


# -- closed forms ---------------------------------------------------------------------


def typea(engine: Engine) -> Iterator[Check]:
    """Closed forms against the fast engine; needs order ``1 < ... < n`` and a divisibility chain."""
    sys, pol = engine.sys, engine.policy
    n = sys.rank
    if not pol.is_weighted or pol.index_order != tuple(range(1, n + 1)):
        return
    c = pol.weights
    if any(hi % lo for lo, hi in zip(c, c[1:])):
        return
    if sys.type_label == "A":
        theta = sys.theta
        for d in range(1, sum(c) + 1):
            w = closed_form_word(n, c, d)
            yield Check("typea-word", _fmt(theta, d), w == engine.fast_word(theta, d), render(w))
    if sys.type_label in ("A", "B", "C", "D"):
        for alpha in sys.positive_roots:
            if min(alpha) < 1:
                continue
            table = build_table(n, c, alpha)
            counts = table.prefix_counts(len(table))
            yield Check("typea-table", f"{alpha}", all(counts[i] == m * ci for i, (m, ci) in
                                                      enumerate(zip(alpha, c), start=1)))
            for d in range(1, len(table) + 1):
                yield Check("typea-multiset", _fmt(alpha, d),
                            bcd_multiset(c, alpha, d) == engine.multiset_chain(alpha, d))


# -- generalized orders ---------------------------------------------------------------


def lifted_finite_word(engine: Engine, alpha, preimages) -> tuple:
    return tuple((i, preimages[i - 1]) for i, _ in engine.finite_word(alpha))


def generalized(engine: Engine, d_range=range(-4, 7), markers: int = 3) -> Iterator[Check]:
    """Fast = Oracle on the given range, plus the marker lifting identity."""
    sys, pol = engine.sys, engine.policy
    if not isinstance(pol, GeneralizedOrder):
        return
    for alpha in sys.positive_roots:
        for d in d_range:
            s = pol.window_for(alpha, d)
            brute = oracle_word(sys, pol, alpha, d, s)
            fast = engine.fast_word(alpha, d)
            yield Check("generalized-oracle", _fmt(alpha, d), brute == fast,
                        f"oracle {render(brute)} fast {render(fast)}")
        for s in range(1, markers + 1):
            for sign in (1, -1):
                _, pre = pol.marker(s, sign)
                target = pol.f_marker(alpha, s, sign)
                w = engine.fast_word(alpha, target)
                yield Check("generalized-marker", f"{_fmt(alpha, target)} s={sign * s}",
                            w == lifted_finite_word(engine, alpha, pre), render(w))


def run(name: str, engine: Engine, d_range=None, s: int = 3, count: int = 200) -> Iterator[Check]:
    """Dispatch a suite by name."""
    if name == "tightness":
        yield from tightness(engine, d_range)
    elif name == "convexity":
        yield from convexity(engine, d_range)
    elif name == "periodicity":
        yield from periodicity(engine, d_range)
    elif name == "monotonicity":
        yield from monotonicity(engine, d_range)
    elif name == "oracle":
        yield from oracle(engine, d_range, s)
    elif name == "weyl":
        if not isinstance(engine.policy, WeightedOrder):
            yield Check("weyl", "policy", False, "the weyl suite needs a weighted order")
            return
        yield from weyl(engine, count)
    elif name == "typea":
        yield from typea(engine)
    elif name == "generalized":
        yield from generalized(engine, d_range if d_range is not None else range(-4, 7))
    else:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
