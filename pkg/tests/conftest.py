from pathlib import Path

import pytest

from lyndonloop import WeightedOrder, build
from lyndonloop.leclerc import Engine
from lyndonloop.words import parse_word

GOLDEN = Path(__file__).parent / "golden" / "reference_words.tsv"

# (type, rank, orders, weight vectors): identity plus one permutation, all-ones plus one mixed vector
ORACLE_GRID = [
    ("A", 2, [(1, 2), (2, 1)], [(1, 1), (1, 2)]),
    ("A", 3, [(1, 2, 3), (2, 1, 3)], [(1, 1, 1), (2, 1, 3)]),
    ("B", 2, [(1, 2), (2, 1)], [(1, 1), (2, 3)]),
    ("C", 3, [(1, 2, 3), (3, 1, 2)], [(1, 1, 1), (1, 2, 3)]),
    ("G", 2, [(1, 2), (2, 1)], [(1, 1), (2, 3)]),
]


def grid_engines():
    for typ, rank, orders, weights in ORACLE_GRID:
        sys_ = build(typ, rank)
        for order in orders:
            for c in weights:
                yield f"{sys_.name}-{''.join(map(str, order))}-{''.join(map(str, c))}", Engine(
                    sys_, WeightedOrder(order, c))


def golden_rows():
    rows = []
    for line in GOLDEN.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        typ, order, weights, d, word = line.split("\t")
        rows.append((typ, order, tuple(int(c) for c in weights.split()), int(d), word))
    return rows


def engine(typ, rank=None, order=None, weights=None):
    sys_ = build(typ, rank)
    n = sys_.rank
    return Engine(sys_, WeightedOrder(order or tuple(range(1, n + 1)), weights or (1,) * n))


@pytest.fixture
def a2():
    return engine("A", 2)


def w(text):
    return parse_word(text)
