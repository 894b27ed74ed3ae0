"""Total orders on the loop alphabet ``{i^(d)}``.

A letter ``i^(d)`` is smaller than ``j^(e)`` when its relative exponent is
larger, ties broken by the order on the node set.  Two exponent policies are
supported:

``WeightedOrder``
    relative exponent ``d / c_i`` for positive integer weights ``c_i``.
``GeneralizedOrder``
    relative exponent ``f_i(d)`` with ``f_i(d) = a_i^+ d`` for ``d >= 0`` and
    ``a_i^- d`` for ``d < 0`` (positive rational slopes).

All comparisons are exact; the weighted policy cross-multiplies integers and
the generalized one uses :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .rootsys import ConfigurationError

__all__ = [
    "GeneralizedOrder",
    "MarkerLadder",
    "OrderPolicy",
    "UnsupportedOperation",
    "WeightedOrder",
    "parse_order",
]

LESS, EQUAL, GREATER = -1, 0, 1


class UnsupportedOperation(RuntimeError):
    """The requested operation is not defined for this order policy."""


def parse_order(text: str, rank: int) -> tuple[int, ...]:
    """Parse ``"51324"`` or ``"5,1,3,2,4"`` (smallest node first)."""
    text = text.strip()
    if "," in text or " " in text:
        items = [int(t) for t in text.replace(",", " ").split()]
    else:
        items = [int(ch) for ch in text]
    if sorted(items) != list(range(1, rank + 1)):
        raise ConfigurationError(f"order {text!r} is not a permutation of 1..{rank}")
    return tuple(items)


class OrderPolicy:
    """Common interface: ``key(i, d)`` is a sort key realizing the letter order."""

    index_order: tuple[int, ...]
    rank: int

    @cached_property
    def position(self) -> dict[int, int]:
        return {i: p for p, i in enumerate(self.index_order)}

    def precedes(self, i: int, j: int) -> bool:
        """True if node ``i`` comes before ``j`` in the node order."""
        return self.position[i] < self.position[j]

    def rel(self, i: int, d: int):
        raise NotImplementedError

    def key(self, i: int, d: int):
        raise NotImplementedError

    def cmp_letters(self, a, b) -> int:
        (i, d), (j, e) = a, b
        if i == j and d == e:
            return EQUAL
        fi, fj = self.rel(i, d), self.rel(j, e)
        if fi != fj:
            return LESS if fi > fj else GREATER
        return LESS if self.precedes(i, j) else GREATER

    def window(self, s: int) -> dict[int, tuple[int, int]]:
        raise NotImplementedError

    def fingerprint(self) -> tuple:
        raise NotImplementedError

    @property
    def is_weighted(self) -> bool:
        return False

    def _check_order(self):
        if sorted(self.index_order) != list(range(1, self.rank + 1)):
            raise ConfigurationError(f"order {self.index_order} is not a permutation of 1..{self.rank}")


@dataclass(frozen=True, eq=False)
class WeightedOrder(OrderPolicy):
    index_order: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "index_order", tuple(self.index_order))
        object.__setattr__(self, "weights", tuple(self.weights))
        self._check_order()
        if len(self.weights) != self.rank:
            raise ConfigurationError(f"expected {self.rank} weights, got {len(self.weights)}")
        if any(c < 1 for c in self.weights):
            raise ConfigurationError("weights must be positive integers")

    @property
    def rank(self) -> int:
        return len(self.index_order)

    @property
    def is_weighted(self) -> bool:
        return True

    @cached_property
    def _scale(self) -> tuple[int, ...]:
        m = lcm(*self.weights)
        return tuple(m // c for c in self.weights)

    def c(self, i: int) -> int:
        return self.weights[i - 1]

    def rel(self, i: int, d: int) -> Fraction:
        return Fraction(d, self.weights[i - 1])

    def cmp_letters(self, a, b) -> int:
        (i, d), (j, e) = a, b
        if i == j and d == e:
            return EQUAL
        lhs, rhs = d * self.weights[j - 1], e * self.weights[i - 1]
        if lhs != rhs:
            return LESS if lhs > rhs else GREATER
        return LESS if self.precedes(i, j) else GREATER

    def key(self, i: int, d: int) -> tuple[int, int]:
        # -d/c_i scaled by lcm(c) stays integral
        return (-d * self._scale[i - 1], self.position[i])

    def weighted_height(self, alpha) -> int:
        return sum(k * c for k, c in zip(alpha, self.weights))

    def window(self, s: int) -> dict[int, tuple[int, int]]:
        if s < 0:
            raise ValueError("window parameter must be >= 0")
        return {i: (-s * c, s * c) for i, c in enumerate(self.weights, start=1)}

    def window_for(self, alpha, d: int) -> int:
        """Smallest ``s`` with ``|d| <= s f(alpha)``."""
        f = self.weighted_height(alpha)
        return -(-abs(d) // f)

    def fingerprint(self) -> tuple:
        return ("weighted", self.index_order, self.weights)

    def to_json(self) -> dict:
        return {"weights": list(self.weights)}


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class MarkerLadder:
    """Common marker values ``N`` with per-node preimages ``N_i`` (``f_i(N_i) = N``).

    ``positive[s]`` is ``(N^(+,s), (N_1, ..., N_n))``; likewise ``negative``.
    """

    positive: tuple
    negative: tuple

    def marker(self, s: int, sign: int):
        return (self.positive if sign > 0 else self.negative)[s]


@dataclass(frozen=True, eq=False)
class GeneralizedOrder(OrderPolicy):
    """Piecewise-linear exponent policy with per-node slopes for each sign of ``d``."""

    index_order: tuple[int, ...]
    slopes_pos: tuple[Fraction, ...]
    slopes_neg: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "index_order", tuple(self.index_order))
        object.__setattr__(self, "slopes_pos", tuple(_frac(a) for a in self.slopes_pos))
        object.__setattr__(self, "slopes_neg", tuple(_frac(a) for a in self.slopes_neg))
        self._check_order()
        for slopes in (self.slopes_pos, self.slopes_neg):
            if len(slopes) != self.rank:
                raise ConfigurationError(f"expected {self.rank} slopes, got {len(slopes)}")
            if any(a <= 0 for a in slopes):
                raise ConfigurationError("slopes must be positive")

    @property
    def rank(self) -> int:
        return len(self.index_order)

    def rel(self, i: int, d: int) -> Fraction:
        return (self.slopes_pos if d >= 0 else self.slopes_neg)[i - 1] * d

    def key(self, i: int, d: int):
        return (-self.rel(i, d), self.position[i])

    @cached_property
    def _marker_step(self) -> tuple[Fraction, Fraction]:
        # smallest positive N that is an integer multiple of every slope
        def common(slopes):
            num = lcm(*(a.numerator for a in slopes))
            den = 0
            for a in slopes:
                den = gcd(den, a.denominator)
            return Fraction(num, den)
        return common(self.slopes_pos), common(self.slopes_neg)

    def marker(self, s: int, sign: int = 1) -> tuple[Fraction, tuple[int, ...]]:
        """``(N^(+-,s), (N_i))`` for the ``s``-th marker of the given sign."""
        if s < 0:
            raise ValueError("marker index must be >= 0")
        step_pos, step_neg = self._marker_step
        if sign > 0:
            n = s * step_pos
            preimages = tuple(n / a for a in self.slopes_pos)
        else:
            n = -s * step_neg
            preimages = tuple(n / a for a in self.slopes_neg)
        assert all(p.denominator == 1 for p in preimages)
        preimages = tuple(int(p) for p in preimages)
        assert all(self.rel(i, p) == n for i, p in enumerate(preimages, start=1))
        return n, preimages

    def ladder(self, depth: int) -> MarkerLadder:
        return MarkerLadder(tuple(self.marker(s, 1) for s in range(depth + 1)),
                            tuple(self.marker(s, -1) for s in range(depth + 1)))

    def f_marker(self, alpha, s: int, sign: int) -> int:
        """``f_N(alpha) = sum k_i N_i`` for the ``s``-th marker of the given sign."""
        _, pre = self.marker(s, sign)
        return sum(k * p for k, p in zip(alpha, pre))

    def window(self, s: int) -> dict[int, tuple[int, int]]:
        _, lo = self.marker(s, -1)
        _, hi = self.marker(s, 1)
        return {i: (lo[i - 1], hi[i - 1]) for i in range(1, self.rank + 1)}

    def window_for(self, alpha, d: int) -> int:
        """Smallest ``s`` with ``f_{N(-,s)}(alpha) <= d <= f_{N(+,s)}(alpha)``."""
        s = 0
        while not (self.f_marker(alpha, s, -1) <= d <= self.f_marker(alpha, s, 1)):
            s += 1
        return s

    def fingerprint(self) -> tuple:
        return ("generalized", self.index_order, self.slopes_pos, self.slopes_neg)

    def to_json(self) -> dict:
        return {"slopes": {"pos": [str(a) for a in self.slopes_pos],
                           "neg": [str(a) for a in self.slopes_neg]}}
