"""Standard Lyndon loop words ``l(alpha, d)``.

Two engines evaluate the generalized Leclerc recursion

    l(alpha, d) = max { l(g1, d1) l(g2, d2) : (g1, d1) + (g2, d2) = (alpha, d),
                        l(g1, d1) < l(g2, d2) }

``naive``
    tries every exponent split allowed by the coarse bound
    ``floor(d/f(alpha)) <= d_r / c_{i_r} <= ceil(d/f(alpha))`` on the letters
    of ``l(alpha, d)`` (weighted orders only).
``fast``
    first computes the letter multiset of ``l(alpha, d)`` from the chain
    ``M(alpha, 0) -> M(alpha, 1) -> ...`` (each step raises the letter whose
    raised copy is largest) and keeps only the splits whose two multisets
    partition it.  The costandard factorization of ``l(alpha, d)`` is such a
    split, so the restricted maximum equals the full one.  Weighted orders
    also reduce ``d`` to ``[0, f(alpha))`` through the periodicity shift.

An :class:`Engine` owns its memo tables and is meant to be confined to one
thread; build one engine per worker for parallel table generation.
"""
from __future__ import annotations

from collections import Counter

from .order import OrderPolicy, UnsupportedOperation
from .rootsys import RootSystem
from .words import canonical_factorization, hdeg, is_exponent_tight, upsilon, vdeg

__all__ = ["Engine", "compute_word", "engine_for"]

ENGINES = ("fast", "naive", "oracle")


def _shift(letters, c, q):
    return tuple((i, d + q * c[i - 1]) for i, d in letters)


class Engine:
    """Memoized evaluator of ``l(alpha, d)`` for one root system and one order."""

    def __init__(self, sys: RootSystem, policy: OrderPolicy):
        if policy.rank != sys.rank:
            raise ValueError(f"order has rank {policy.rank}, root system has rank {sys.rank}")
        self.sys = sys
        self.policy = policy
        self._finite: dict = {}
        self._fast: dict = {}
        self._naive: dict = {}
        self._chain_up: dict = {}
        self._chain_down: dict = {}

    # -- helpers -----------------------------------------------------------

    def key(self, w) -> tuple:
        k = self.policy.key
        return tuple(k(i, d) for i, d in w)

    def f(self, alpha) -> int:
        if not self.policy.is_weighted:
            raise UnsupportedOperation("weighted height needs a weighted order")
        return self.policy.weighted_height(alpha)

    def _check_root(self, alpha):
        alpha = tuple(alpha)
        if not self.sys.is_root(alpha):
            raise ValueError(f"{alpha} is not a positive root of {self.sys.name}")
        return alpha

    def _simple_node(self, alpha):
        if sum(alpha) == 1:
            return alpha.index(1) + 1
        return None

    # -- finite type ---------------------------------------------------------

    def finite_word(self, alpha) -> tuple:
        """Leclerc's finite-type word of degree ``alpha`` with all exponents 0."""
        alpha = self._check_root(alpha)
        return self._finite_word(alpha)

    def _finite_word(self, alpha):
        hit = self._finite.get(alpha)
        if hit is not None:
            return hit
        node = self._simple_node(alpha)
        if node is not None:
            word = ((node, 0),)
        else:
            best, best_key = None, None
            for g1, g2 in self.sys.splittings[alpha]:
                w1, w2 = self._finite_word(g1), self._finite_word(g2)
                k1, k2 = self.key(w1), self.key(w2)
                if k1 < k2 and (best_key is None or k1 + k2 > best_key):
                    best, best_key = w1 + w2, k1 + k2
            word = best
        self._finite[alpha] = word
        return word

    # -- letter multisets ----------------------------------------------------

    def _step_up(self, letters):
        key = self.policy.key
        idx = max(range(len(letters)), key=lambda a: key(letters[a][0], letters[a][1] + 1))
        i, d = letters[idx]
        out = list(letters)
        out[idx] = (i, d + 1)
        return tuple(sorted(out))

    def _step_down(self, letters):
        key = self.policy.key
        idx = min(range(len(letters)), key=lambda a: key(*letters[a]))
        i, d = letters[idx]
        out = list(letters)
        out[idx] = (i, d - 1)
        return tuple(sorted(out))

    def _chain(self, alpha, steps, up):
        table = self._chain_up if up else self._chain_down
        chain = table.get(alpha)
        if chain is None:
            chain = [tuple(sorted(self._finite_word(alpha)))]
            table[alpha] = chain
        while len(chain) <= steps:
            chain.append(self._step_up(chain[-1]) if up else self._step_down(chain[-1]))
        return chain[steps]

    def multiset(self, alpha, d: int) -> tuple:
        """Sorted tuple of the letters of ``l(alpha, d)``, via the first-letter chain."""
        alpha = self._check_root(alpha)
        return self._multiset(alpha, d)

    def _multiset(self, alpha, d):
        if self.policy.is_weighted:
            q, r = divmod(d, self.policy.weighted_height(alpha))
            base = self._chain(alpha, r, True)
            return tuple(sorted(_shift(base, self.policy.weights, q))) if q else base
        return self._chain(alpha, abs(d), d >= 0)

    def multiset_chain(self, alpha, d: int) -> Counter:
        return Counter(self.multiset(alpha, d))

    # -- fast engine ---------------------------------------------------------

    def fast_word(self, alpha, d: int) -> tuple:
        alpha = self._check_root(alpha)
        return self._fast_word(alpha, d)

    def _fast_word(self, alpha, d):
        pol = self.policy
        if pol.is_weighted:
            q, r = divmod(d, pol.weighted_height(alpha))
            if q:
                return _shift(self._fast_word(alpha, r), pol.weights, q)
        hit = self._fast.get((alpha, d))
        if hit is not None:
            return hit
        node = self._simple_node(alpha)
        if node is not None:
            word = ((node, d),)
        else:
            target = Counter(self._multiset(alpha, d))
            by_node: dict[int, list[int]] = {}
            for (i, e), m in target.items():
                by_node.setdefault(i, []).extend([e] * m)
            for exps in by_node.values():
                exps.sort()
            best, best_key = None, None
            for g1, g2 in self.sys.splittings[alpha]:
                lo = hi = 0
                for i, k in enumerate(g1, start=1):
                    if k:
                        exps = by_node[i]
                        lo += sum(exps[:k])
                        hi += sum(exps[-k:])
                for d1 in range(lo, hi + 1):
                    m1 = Counter(self._multiset(g1, d1))
                    rest = target - m1
                    if sum(rest.values()) != sum(target.values()) - sum(m1.values()):
                        continue  # m1 is not a sub-multiset
                    if rest != Counter(self._multiset(g2, d - d1)):
                        continue
                    w1, w2 = self._fast_word(g1, d1), self._fast_word(g2, d - d1)
                    k1, k2 = self.key(w1), self.key(w2)
                    if k1 < k2 and (best_key is None or k1 + k2 > best_key):
                        best, best_key = w1 + w2, k1 + k2
            if best is None:
                raise AssertionError(f"no multiset-consistent split for {alpha}, {d}")
            word = best
        self._fast[(alpha, d)] = word
        return word

    # -- naive engine --------------------------------------------------------

    def naive_word(self, alpha, d: int) -> tuple:
        if not self.policy.is_weighted:
            raise UnsupportedOperation("the naive engine needs a weighted order")
        alpha = self._check_root(alpha)
        return self._naive_word(alpha, d)

    def _naive_word(self, alpha, d):
        hit = self._naive.get((alpha, d))
        if hit is not None:
            return hit
        node = self._simple_node(alpha)
        if node is not None:
            word = ((node, d),)
        else:
            f = self.policy.weighted_height
            fa = f(alpha)
            lo_rel, hi_rel = d // fa, -(-d // fa)
            best, best_key = None, None
            for g1, g2 in self.sys.splittings[alpha]:
                f1, f2 = f(g1), f(g2)
                for d1 in range(lo_rel * f1, hi_rel * f1 + 1):
                    d2 = d - d1
                    if not lo_rel * f2 <= d2 <= hi_rel * f2:
                        continue
                    w1, w2 = self._naive_word(g1, d1), self._naive_word(g2, d2)
                    k1, k2 = self.key(w1), self.key(w2)
                    if k1 < k2 and (best_key is None or k1 + k2 > best_key):
                        best, best_key = w1 + w2, k1 + k2
            word = best
        self._naive[(alpha, d)] = word
        return word

    # -- public entry points -------------------------------------------------

    def word(self, alpha, d: int, engine: str = "fast", s: int | None = None) -> tuple:
        """``l(alpha, d)`` with the chosen engine (``fast``, ``naive`` or ``oracle``)."""
        if engine == "fast":
            return self.fast_word(alpha, d)
        if engine == "naive":
            return self.naive_word(alpha, d)
        if engine == "oracle":
            from .oracle import oracle_word
            alpha = self._check_root(alpha)
            if s is None:
                s = self.policy.window_for(alpha, d)
            return oracle_word(self.sys, self.policy, alpha, d, s)
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")

    def is_standard(self, w) -> bool:
        """A word is standard iff its canonical factors are the standard words of their degrees."""
        if not w:
            return True
        for factor in canonical_factorization(self.policy, w):
            alpha = hdeg(factor, self.sys.rank)
            if not self.sys.is_root(alpha):
                return False
            if tuple(factor) != self.fast_word(alpha, vdeg(factor)):
                return False
        return True

    def memo_table(self) -> dict:
        """Snapshot of the fast-engine memo: ``(alpha, d) -> (word, multiset)``."""
        return {k: (w, Counter(w)) for k, w in self._fast.items()}

    def check_memo(self) -> None:
        """Assert the stored words have the right degrees and are exponent-tight."""
        for (alpha, d), w in self._fast.items():
            assert hdeg(w, self.sys.rank) == alpha and vdeg(w) == d, (alpha, d, w)
            assert is_exponent_tight(self.policy, w), (alpha, d, w)

    def upsilon(self, w, k: int = 1):
        return upsilon(self.policy, w, k)


_ENGINES: dict = {}


def engine_for(sys: RootSystem, policy: OrderPolicy) -> Engine:
    """Session-level engine cache keyed by root system and policy fingerprint."""
    key = (sys.type_label, sys.rank, sys.labeling, policy.fingerprint())
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = Engine(sys, policy)
    return eng


def compute_word(sys: RootSystem, policy: OrderPolicy, alpha, d: int, engine: str = "fast") -> tuple:
    return engine_for(sys, policy).word(alpha, d, engine)
