"""Affine Weyl group machinery on real affine roots ``(lam, level)``.

The affine root lattice is identified with ``Q x Z`` via ``a_i -> (a_i, 0)``
and ``a_0 -> (-theta, 1)``.  Coweights are integer vectors ``p`` with
``(a_j, omega_i^vee) = delta_ij``, so ``(alpha, p) = sum_j k_j p_j``.

The diagram automorphisms of the extended group are never materialized:
terminal sets determine elements up to them, and every check below compares
terminal sets.
"""
from __future__ import annotations

from functools import lru_cache
from math import lcm
from typing import NamedTuple

from .leclerc import Engine
from .order import GeneralizedOrder, UnsupportedOperation, WeightedOrder
from .rootsys import RootSystem

__all__ = [
    "AffineRealRoot",
    "InvariantViolation",
    "NotReducedOrder",
    "affine_reflect",
    "beta_sequence",
    "extract_reduced_word",
    "l_block",
    "p_constants",
    "p_of_alpha",
    "roots_from_word",
    "terminal_segment",
    "terminal_set_by_action",
    "translation_terminal_set",
]


class AffineRealRoot(NamedTuple):
    lam: tuple
    level: int

    def is_positive(self, sys: RootSystem) -> bool:
        if self.level > 0:
            return any(self.lam)
        return self.level == 0 and sys.is_root(self.lam)

    def render(self) -> str:
        return f"({','.join(map(str, self.lam))};{self.level})"


class NotReducedOrder(ValueError):
    """The smallest remaining root is not simple: the order is not convex."""


class InvariantViolation(AssertionError):
    """Two independent computations of the same object disagree."""


def simple_affine_root(sys: RootSystem, j: int) -> AffineRealRoot:
    if j == 0:
        return AffineRealRoot(tuple(-t for t in sys.theta), 1)
    return AffineRealRoot(sys.simple(j), 0)


@lru_cache(maxsize=None)
def _reflection_rows(sys: RootSystem) -> tuple:
    """Row ``j`` turns root coordinates into the pairing with the coroot of ``a_j``."""
    n = sys.rank
    theta = sys.theta
    tt = sys.pairing(theta, theta)
    zero_row = []
    for k in range(n):
        num = 2 * sys.pairing(sys.simple(k + 1), theta)
        assert num % tt == 0
        zero_row.append(num // tt)
    rows = [tuple(zero_row)]
    rows += [tuple(sys.cartan[j][k] for k in range(n)) for j in range(n)]
    return tuple(rows)


def affine_reflect(sys: RootSystem, i: int, r: AffineRealRoot) -> AffineRealRoot:
    if not 0 <= i <= sys.rank:
        raise ValueError(f"affine node {i} out of range 0..{sys.rank}")
    lam, level = r
    c = sum(x * y for x, y in zip(lam, _reflection_rows(sys)[i]))
    if not c:
        return AffineRealRoot(tuple(lam), level)
    if i == 0:
        return AffineRealRoot(tuple(x - c * t for x, t in zip(lam, sys.theta)), level + c)
    out = list(lam)
    out[i - 1] -= c
    return AffineRealRoot(tuple(out), level)


def _pair_coweight(alpha, mu) -> int:
    return sum(k * m for k, m in zip(alpha, mu))


def translation_terminal_set(sys: RootSystem, mu) -> set[AffineRealRoot]:
    """Roots made negative by the translation ``mu^``, for dominant regular ``mu``."""
    mu = tuple(mu)
    if len(mu) != sys.rank or any(m <= 0 for m in mu):
        raise ValueError(f"coweight {mu} is not dominant regular")
    return {AffineRealRoot(a, d) for a in sys.positive_roots for d in range(_pair_coweight(a, mu))}


def translation_length(sys: RootSystem, mu) -> int:
    return sum(_pair_coweight(a, mu) for a in sys.positive_roots)


def positive_real_roots(sys: RootSystem, max_level: int):
    for a in sys.positive_roots:
        for d in range(max_level + 1):
            yield AffineRealRoot(a, d)
        neg = tuple(-x for x in a)
        for d in range(1, max_level + 1):
            yield AffineRealRoot(neg, d)


def translation_terminal_set_by_action(sys: RootSystem, mu, max_level: int) -> set[AffineRealRoot]:
    """Brute force: apply ``(lam, d) -> (lam, d - (lam, mu))`` to positive roots up to ``max_level``."""
    out = set()
    for r in positive_real_roots(sys, max_level):
        image = AffineRealRoot(r.lam, r.level - _pair_coweight(r.lam, mu))
        if not image.is_positive(sys):
            out.add(r)
    return out


def extract_reduced_word(sys: RootSystem, ordered_roots) -> list[int]:
    """Greedy extraction of ``i_0, i_{-1}, ...`` from a convexly ordered terminal set.

    The smallest remaining root must be a simple affine root ``a_j``; ``j`` is
    emitted and ``s_j`` is applied to the rest.
    """
    simples = {simple_affine_root(sys, j): j for j in range(sys.rank + 1)}
    rest = [AffineRealRoot(*r) for r in ordered_roots]
    word = []
    while rest:
        head = rest[0]
        j = simples.get(head)
        if j is None:
            raise NotReducedOrder(f"root {head.render()} at step {len(word)} is not simple")
        word.append(j)
        rest = [affine_reflect(sys, j, r) for r in rest[1:]]
    return word


def roots_from_word(sys: RootSystem, word) -> list[AffineRealRoot]:
    """``a_{i_0} < s_{i_0}(a_{i_-1}) < s_{i_0} s_{i_-1}(a_{i_-2}) < ...``"""
    out = []
    for m, j in enumerate(word):
        r = simple_affine_root(sys, j)
        for i in reversed(word[:m]):
            r = affine_reflect(sys, i, r)
        out.append(r)
    return out


def word_matrix(sys: RootSystem, word) -> list[list[int]]:
    """Matrix of ``s_{w[-1]} ... s_{w[0]}`` on coordinates ``(lam_1, ..., lam_n, level)``."""
    n = sys.rank
    cols = []
    for k in range(n + 1):
        lam = tuple(int(t == k) for t in range(n))
        r = AffineRealRoot(lam, int(k == n))
        for j in word:
            r = affine_reflect(sys, j, r)
        cols.append((*r.lam, r.level))
    return [[cols[k][row] for k in range(n + 1)] for row in range(n + 1)]


def terminal_set_by_action(sys: RootSystem, word, max_level: int) -> set[AffineRealRoot]:
    """Positive roots of level ``<= max_level`` sent to negative ones by ``x = s_{i_{1-l}} ... s_{i_0}``."""
    m = word_matrix(sys, word)
    out = set()
    for r in positive_real_roots(sys, max_level):
        v = (*r.lam, r.level)
        image = [sum(a * b for a, b in zip(row, v)) for row in m]
        if not AffineRealRoot(tuple(image[:-1]), image[-1]).is_positive(sys):
            out.add(r)
    return out


# -- coweights from the loop-word order ----------------------------------------


def p_constants(sys: RootSystem, policy, i: int, d: int) -> tuple[int, ...]:
    """Coweight coordinates ``p_j`` with ``L_{<(i,d)} = E_{omega(i,d)}``."""
    if d < 0:
        raise ValueError("p-constants need d >= 0")
    if isinstance(policy, WeightedOrder):
        c = policy.weights
        out = []
        for j in range(1, sys.rank + 1):
            num, den = d * c[j - 1], c[i - 1]
            if j == i:
                out.append(d)
            elif num % den:
                out.append(-(-num // den))
            elif policy.precedes(i, j):
                out.append(num // den)
            else:
                out.append(num // den + 1)
        return tuple(out)
    return p_constants_by_letters(sys, policy, i, d)


def p_constants_by_letters(sys: RootSystem, policy, i: int, d: int) -> tuple[int, ...]:
    """``p_j`` as the unique integer with ``j^(-p_j) >= i^(-d) > j^(-p_j + 1)``."""
    if d < 0:
        raise ValueError("p-constants need d >= 0")
    target = policy.key(i, -d)
    out = []
    for j in range(1, sys.rank + 1):
        # key(j, -p) grows with p; find the smallest p with key(j, -p) >= target
        p = 0
        while policy.key(j, -p) < target:
            p += 1
        while p > 0 and policy.key(j, -(p - 1)) >= target:
            p -= 1
        assert policy.key(j, -p) >= target > policy.key(j, -p + 1)
        out.append(p)
    return tuple(out)


def p_of_alpha(p, alpha) -> int:
    return _pair_coweight(alpha, p)


def terminal_segment(engine: Engine, i: int, d: int) -> list[AffineRealRoot]:
    """``L_{<(i,d)}``: all ``(alpha, p)``, ``p >= 0``, with ``l(alpha, -p) < [i^(-d)]``.

    Computed twice, from the words and from the ``p``-constants; the result is
    returned ordered by ``l(alpha, -p)``.
    """
    sys, policy = engine.sys, engine.policy
    bound = engine.key(((i, -d),))
    by_words = set()
    for alpha in sys.positive_roots:
        p = 0
        # l(alpha, -p) increases with p
        while engine.key(engine.fast_word(alpha, -p)) < bound:
            by_words.add(AffineRealRoot(alpha, p))
            p += 1
    coweight = p_constants(sys, policy, i, d)
    by_formula = {AffineRealRoot(a, p) for a in sys.positive_roots for p in range(p_of_alpha(coweight, a))}
    if by_words != by_formula:
        raise InvariantViolation(
            f"terminal segment ({i},{d}): word-level and formula-level sets differ by "
            f"{sorted(by_words ^ by_formula)}")
    return sorted(by_words, key=lambda r: engine.key(engine.fast_word(r.lam, -r.level)))


def l_block(engine: Engine, depth: int = 1) -> list[AffineRealRoot]:
    """The fundamental block ordered by ``l(alpha, -d)``.

    Weighted: ``{(alpha, d) : 0 <= d < f(alpha)}``.  Generalized:
    ``{(alpha, d) : 0 <= d < f_N(alpha)}`` for the ``depth``-th positive marker.
    """
    sys, policy = engine.sys, engine.policy
    if isinstance(policy, WeightedOrder):
        height = policy.weighted_height
    elif isinstance(policy, GeneralizedOrder):
        def height(a):
            return policy.f_marker(a, depth, 1)
    else:
        raise UnsupportedOperation(f"no block for policy {policy!r}")
    block = [AffineRealRoot(a, d) for a in sys.positive_roots for d in range(height(a))]
    return sorted(block, key=lambda r: engine.key(engine.fast_word(r.lam, -r.level)))


def beta_sequence(engine: Engine, k_min: int, k_max: int, depth: int = 1) -> list[AffineRealRoot]:
    """``beta_{k_max}, ..., beta_{k_min}`` in increasing order of ``l(alpha, -d)``.

    The fundamental block is turned into a reduced word, the roots are rebuilt
    from that word by reflections, and the result is extended by the
    translation ``d -> d +- f(alpha)``.  Generalized orders have no periodic
    extension; only ``k <= 0`` inside the ``depth``-th block is available.
    """
    if k_min > k_max:
        raise ValueError("k_min must not exceed k_max")
    sys, policy = engine.sys, engine.policy
    block = l_block(engine, depth)
    word = extract_reduced_word(sys, block)
    rebuilt = roots_from_word(sys, word)
    if rebuilt != block:
        raise InvariantViolation("roots rebuilt from the reduced word differ from the block")
    size = len(block)
    out = []
    for k in range(k_max, k_min - 1, -1):
        n, r = divmod(-k, size)
        if isinstance(policy, WeightedOrder):
            lam, level = rebuilt[r]
            out.append(AffineRealRoot(lam, level + n * policy.weighted_height(lam)))
        else:
            if n != 0:
                raise UnsupportedOperation(
                    f"generalized orders only give beta_k for {1 - size} <= k <= 0 at depth {depth}")
            out.append(rebuilt[r])
    return out


def translation_mu(policy: WeightedOrder) -> tuple[int, ...]:
    """``mu = sum c_i omega_i^vee``, so that ``(alpha, mu) = f(alpha)``."""
    return tuple(policy.weights)


def weights_lcm(policy: WeightedOrder) -> int:
    return lcm(*policy.weights)
