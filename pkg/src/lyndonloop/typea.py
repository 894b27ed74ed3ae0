"""Closed forms for divisible weight chains with the order ``1 < 2 < ... < n``.

Everything here assumes ``c_i | c_{i+1}``.  The first-letter table lists, for
``d = 1, 2, ...``, the node whose letter is raised when passing from
``l(alpha, d-1)`` to ``l(alpha, d)``; the exponent of node ``i`` in
``l(alpha, d)`` is therefore read off from how often ``i`` occurs among the
first ``d`` entries.  Other orders and non-divisible weights go through the
general engines.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .rootsys import ConfigurationError

__all__ = ["FirstLetterTable", "bcd_multiset", "build_table", "closed_form_word"]


def _check_chain(weights) -> tuple[int, ...]:
    weights = tuple(int(c) for c in weights)
    if not weights or any(c < 1 for c in weights):
        raise ConfigurationError("weights must be positive integers")
    for lo, hi in zip(weights, weights[1:]):
        if hi % lo:
            raise ConfigurationError(f"weights {weights} do not form a divisibility chain")
    return weights


@dataclass(frozen=True)
class FirstLetterTable:
    weights: tuple[int, ...]
    multiplicities: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(x for col in self.columns for x in col)

    def __len__(self) -> int:
        return len(self.sequence)

    def prefix_counts(self, d: int) -> Counter:
        """How often each node occurs among the first ``d`` entries."""
        if not 0 <= d <= len(self):
            raise ValueError(f"d={d} outside the table window 0..{len(self)}")
        return Counter(self.sequence[:d])

    def render(self) -> str:
        """Column-major layout: each column starts with ``n`` at the top."""
        width = len(str(self.n))
        height = max(len(col) for col in self.columns)
        rows = []
        for r in range(height):
            cells = [str(col[r]).rjust(width) if r < len(col) else " " * width for col in self.columns]
            rows.append(" ".join(cells).rstrip())
        return "\n".join(rows)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "weights": list(self.weights),
                           "multiplicities": list(self.multiplicities),
                           "sequence": list(self.sequence)})


def build_table(n: int, weights, multiplicities=None) -> FirstLetterTable:
    """First-letter table for ``n`` nodes; ``multiplicities`` default to all ones (type A)."""
    c = _check_chain(weights)
    if len(c) != n:
        raise ConfigurationError(f"expected {n} weights, got {len(c)}")
    m = tuple(multiplicities) if multiplicities is not None else (1,) * n
    if len(m) != n or any(k < 1 for k in m):
        raise ConfigurationError("multiplicities must be n positive integers")

    columns = [[n] * m[n - 1]]
    for step in range(2, n + 1):
        node = n - step + 1
        factor = c[node] // c[node - 1]
        columns = [list(col) for _ in range(factor) for col in columns]
        columns[-1].extend([node] * m[node - 1])
    columns = [tuple(col) for _ in range(c[0]) for col in columns]
    return FirstLetterTable(c, m, tuple(columns))


def _reduce(d: int, period: int) -> tuple[int, int]:
    """Write ``d = q * period + r`` with ``0 < r <= period``."""
    q = (d - 1) // period
    return q, d - q * period


def closed_form_word(n: int, weights, d: int, periodic: bool = True) -> tuple:
    """``l(theta, d)`` in type ``A_n`` from the first-letter table.

    ``d`` outside ``(0, sum c]`` is brought back by the shift ``i^(e) -> i^(e + c_i)``
    unless ``periodic`` is false, in which case it is rejected.
    """
    c = _check_chain(weights)
    if len(c) != n:
        raise ConfigurationError(f"expected {n} weights, got {len(c)}")
    period = sum(c)
    q, r = _reduce(d, period)
    if q and not periodic:
        raise ValueError(f"d={d} outside the window 1..{period}")
    table = build_table(n, c)
    a = table.sequence[r - 1]
    k = table.prefix_counts(r)[a]
    exps = {a: k}
    for i in range(2, a + 1):
        node = a - i + 1
        # ceil(k * c_node / c_a - 1)
        exps[node] = -(-(k * c[node - 1] - c[a - 1]) // c[a - 1])
    for node in range(a + 1, n + 1):
        exps[node] = k * c[node - 1] // c[a - 1]
    order = list(range(a, 0, -1)) + list(range(a + 1, n + 1))
    return tuple((i, exps[i] + q * c[i - 1]) for i in order)


def bcd_multiset(weights, multiplicities, d: int) -> Counter:
    """Letter multiset of ``l(alpha, d)`` for ``alpha = sum m_i a_i`` with all ``m_i >= 1``.

    With ``p_i = m_i q_i + r_i`` occurrences of node ``i`` among the first
    ``d`` table entries, ``r_i`` letters of ``i`` carry exponent ``q_i + 1`` and
    the remaining ``m_i - r_i`` carry ``q_i``.
    """
    m = tuple(multiplicities)
    table = build_table(len(m), weights, m)
    if not 0 < d <= len(table):
        raise ValueError(f"d={d} outside the window 1..{len(table)}")
    counts = table.prefix_counts(d)
    out = Counter()
    for i, mi in enumerate(m, start=1):
        q, r = divmod(counts[i], mi)
        if r:
            out[(i, q + 1)] += r
        if mi - r:
            out[(i, q)] += mi - r
    return out
