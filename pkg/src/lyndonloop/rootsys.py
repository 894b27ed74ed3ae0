"""Finite root systems of simple Lie algebras, built from Cartan matrices.

Positive roots are integer coefficient vectors over the simple roots and are
generated by root strings, so no floating point enters anywhere.

Node numbering: types A-D use Bourbaki numbering. For G2, F4 and E6-E8 the
numbering is the one used by the published tables of standard Lyndon loop
words (chain-first labelling):

* G2: node 1 long, node 2 short, so theta = 2a1 + 3a2.
* F4: 1 - 2 => 3 - 4 with nodes 1, 2 short, theta = 2a1 + 4a2 + 3a3 + 2a4.
* E6: chain 1-2-3-4-5, node 6 attached to 3.
* E7: chain 1-2-3-4-5-6, node 7 attached to 4.
* E8: chain 1-2-3-4-5-6-7, node 8 attached to 5.

Pass ``labeling="bourbaki"`` to :func:`build` for Bourbaki numbering of the
exceptional types.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

__all__ = [
    "ConfigurationError",
    "RootSystem",
    "build",
    "cartan_matrix",
    "parse_type",
]


class ConfigurationError(ValueError):
    """Invalid Lie type, rank or related user configuration."""


EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

# Permutations taking table numbering to Bourbaki numbering: entry k-1 is the
# Bourbaki index of table node k.
_TABLE_TO_BOURBAKI = {
    "G2": (2, 1),
    "F4": (4, 3, 2, 1),
    "E6": (1, 3, 4, 5, 6, 2),
    "E7": (7, 6, 5, 4, 3, 1, 2),
    "E8": (8, 7, 6, 5, 4, 3, 1, 2),
}


def parse_type(type_label: str, rank: int | None = None) -> tuple[str, int]:
    """Normalize ``("B", 3)``, ``("B3", None)`` or ``("G2", None)`` to ``(letter_or_label, rank)``."""
    label = type_label.strip().upper()
    if label in ("E", "F", "G") and rank is not None:
        label = f"{label}{rank}"
    if label in EXCEPTIONAL_RANKS:
        r = EXCEPTIONAL_RANKS[label]
        if rank is not None and rank != r:
            raise ConfigurationError(f"type {label} has rank {r}, got {rank}")
        return label, r
    if len(label) > 1 and label[0] in "ABCD" and label[1:].isdigit():
        r = int(label[1:])
        if rank is not None and rank != r:
            raise ConfigurationError(f"type {label} has rank {r}, got {rank}")
        label, rank = label[0], r
    elif len(label) > 1 and label[0] in "EFG" and label[1:].isdigit():
        raise ConfigurationError(f"unknown exceptional type {type_label!r}")
    if label not in ("A", "B", "C", "D"):
        raise ConfigurationError(f"unknown Lie type {type_label!r}")
    if rank is None:
        raise ConfigurationError(f"type {label} needs a rank")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}[label]
    if rank < minimum:
        raise ConfigurationError(f"type {label} needs rank >= {minimum}, got {rank}")
    return label, rank


def _bourbaki_cartan(label: str, n: int) -> list[list[int]]:
    """Bourbaki Cartan matrix, 0-based, with ``a_ij = 2(a_i, a_j)/(a_i, a_i)``."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1], a[j - 1][i - 1] = aij, aji

    if label in ("A", "B", "C"):
        for i in range(1, n):
            link(i, i + 1)
        if label == "B":
            link(n - 1, n, -1, -2)  # a_n short
        elif label == "C":
            link(n - 1, n, -2, -1)  # a_n long
    elif label == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif label == "G2":
        link(1, 2, -3, -1)  # a_1 short
    elif label == "F4":
        link(1, 2)
        link(2, 3, -1, -2)  # a_1, a_2 long
        link(3, 4)
    elif label in ("E6", "E7", "E8"):
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    else:
        raise ConfigurationError(f"unknown Lie type {label!r}")
    return a


def cartan_matrix(label: str, n: int, labeling: str = "table") -> tuple[tuple[int, ...], ...]:
    """Cartan matrix as nested tuples (0-based rows and columns)."""
    a = _bourbaki_cartan(label, n)
    if labeling == "table" and label in _TABLE_TO_BOURBAKI:
        perm = [p - 1 for p in _TABLE_TO_BOURBAKI[label]]
        a = [[a[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    elif labeling not in ("table", "bourbaki"):
        raise ConfigurationError(f"unknown labeling {labeling!r}")
    return tuple(tuple(row) for row in a)


def _symmetrizer(a) -> list[int]:
    """Minimal positive integers D_i with D_i a_ij = D_j a_ji (connected diagram)."""
    n = len(a)
    num = [0] * n
    den = [1] * n
    num[0] = 1
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and num[j] == 0:
                # D_j = D_i a_ij / a_ji
                num[j] = num[i] * a[i][j]
                den[j] = den[i] * a[j][i]
                g = gcd(num[j], den[j])
                num[j], den[j] = num[j] // g, den[j] // g
                if den[j] < 0:
                    num[j], den[j] = -num[j], -den[j]
                stack.append(j)
    if any(v == 0 for v in num):
        raise ConfigurationError("Dynkin diagram is not connected")
    lcm = 1
    for d in den:
        lcm = lcm * d // gcd(lcm, d)
    vals = [num[i] * (lcm // den[i]) for i in range(n)]
    g = 0
    for v in vals:
        g = gcd(g, v)
    return [v // g for v in vals]


Root = tuple  # coefficient vector over the simple roots


@dataclass(frozen=True)
class RootSystem:
    """Immutable finite root system.

    Roots are tuples of integer coefficients over the simple roots; nodes are
    1-based in the public API (``simple(1)`` is the first simple root).
    """

    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    sym_cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    labeling: str = "table"
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def name(self) -> str:
        return self.type_label if self.type_label in EXCEPTIONAL_RANKS else f"{self.type_label}{self.rank}"

    @cached_property
    def theta(self) -> Root:
        """The highest root: the unique positive root with no simple root addable."""
        tops = [b for b in self.positive_roots
                if all(self.add(b, self.simple(i)) is None for i in range(1, self.rank + 1))]
        assert len(tops) == 1, tops
        return tops[0]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(self.theta)

    def simple(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise ConfigurationError(f"node {i} out of range 1..{self.rank}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_root(self, coeffs) -> bool:
        """Membership in the set of *positive* roots."""
        return tuple(coeffs) in self._root_set

    def add(self, alpha, beta) -> Root | None:
        s = tuple(x + y for x, y in zip(alpha, beta))
        return s if s in self._root_set else None

    def pairing(self, alpha, beta) -> int:
        d = self.sym_cartan
        n = self.rank
        return sum(alpha[i] * beta[j] * d[i][j] for i in range(n) for j in range(n) if alpha[i] and beta[j])

    def coroot_pairing(self, lam, i: int) -> int:
        """``(lam, a_i^vee)`` for 1-based node ``i``, computed through the Cartan matrix."""
        a = self.cartan
        return sum(lam[k] * a[i - 1][k] for k in range(self.rank))

    def height(self, alpha) -> int:
        return sum(alpha)

    @cached_property
    def splittings(self) -> dict:
        """Map each positive root to its ordered decompositions ``(g1, g2)`` into two positive roots."""
        out: dict = {a: [] for a in self.positive_roots}
        for g1 in self.positive_roots:
            for g2 in self.positive_roots:
                s = self.add(g1, g2)
                if s is not None:
                    out[s].append((g1, g2))
        return out

    def index_counts(self, alpha) -> dict[int, int]:
        """Nonzero coefficients as ``{node: multiplicity}``."""
        return {i + 1: k for i, k in enumerate(alpha) if k}

    def parse_root(self, spec: str) -> Root:
        """Parse ``"theta"``, ``"simple:i"`` or a comma-separated coefficient vector."""
        s = spec.strip().lower()
        if s == "theta":
            return self.theta
        if s.startswith("simple:"):
            return self.simple(int(s.split(":", 1)[1]))
        try:
            coeffs = tuple(int(x) for x in s.replace(" ", "").split(","))
        except ValueError:
            raise ConfigurationError(f"cannot parse root {spec!r}") from None
        if len(coeffs) != self.rank or not self.is_root(coeffs):
            raise ConfigurationError(f"{spec!r} is not a positive root of {self.name}")
        return coeffs


def _positive_roots(a) -> list[Root]:
    n = len(a)
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # q: how far beta - k a_i stays a root
                q = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        q += 1
                    else:
                        break
                pairing = sum(beta[k] * a[i][k] for k in range(n))
                p = q - pairing
                if p > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def build(type_label: str, rank: int | None = None, labeling: str = "table") -> RootSystem:
    """Build the root system of a simple Lie type, e.g. ``build("A", 4)`` or ``build("E8")``."""
    label, n = parse_type(type_label, rank)
    return _build(label, n, labeling)


@lru_cache(maxsize=None)
def _build(label: str, n: int, labeling: str) -> RootSystem:
    a = cartan_matrix(label, n, labeling)
    dsym = _symmetrizer(a)
    sym = tuple(tuple(dsym[i] * a[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if sym[i][j] != sym[j][i]:
                raise AssertionError("symmetrization failed")
    roots = tuple(_positive_roots(a))
    return RootSystem(label, n, a, sym, roots, labeling, frozenset(roots))
