import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lyndonloop import ConfigurationError, render
from lyndonloop.typea import bcd_multiset, build_table, closed_form_word

from conftest import engine

SEQ_1_2_6_12 = "4 4 3 4 4 3 4 4 3 2 4 4 3 4 4 3 4 4 3 2 1"
SEQ_1_3_15 = "3 3 3 3 3 2 3 3 3 3 3 2 3 3 3 3 3 2 1"


def _seq(table):
    return " ".join(map(str, table.sequence))


def test_table_sequences():
    assert _seq(build_table(4, (1, 2, 6, 12))) == SEQ_1_2_6_12
    assert _seq(build_table(3, (1, 3, 15))) == SEQ_1_3_15


def test_table_render_has_columns():
    table = build_table(4, (1, 3, 9, 27))
    rows = table.render().splitlines()
    assert len(rows) == 4
    assert rows[0].split() == ["4"] * 27
    assert rows[-1].split() == ["1"]
    assert json.loads(table.to_json())["sequence"] == list(table.sequence)


def test_c4_table():
    table = build_table(4, (1, 2, 6, 12), (2, 2, 2, 1))
    rows = table.render().splitlines()
    assert [r.split() for r in rows] == [["4"] * 12, ["3"] * 6, ["3"] * 6, ["2"] * 2, ["2"] * 2, ["1"], ["1"]]
    assert len(table) == 2 * 1 + 2 * 2 + 2 * 6 + 12


def test_rejects_non_divisible_chains():
    with pytest.raises(ConfigurationError):
        build_table(3, (1, 2, 3))
    with pytest.raises(ConfigurationError):
        build_table(3, (1, 2))
    with pytest.raises(ConfigurationError):
        build_table(2, (1, 2), (1, 0))


def test_closed_form_examples():
    assert render(closed_form_word(4, (1, 2, 6, 12), 3)) == "[3^(1) 2^(0) 1^(0) 4^(2)]"
    assert render(closed_form_word(4, (1, 1, 1, 1), 1)) == "[4^(1) 3^(0) 2^(0) 1^(0)]"
    assert render(closed_form_word(4, (1, 1, 1, 1), 2)) == "[3^(1) 2^(0) 1^(0) 4^(1)]"
    with pytest.raises(ValueError):
        closed_form_word(4, (1, 1, 1, 1), 9, periodic=False)


def test_closed_form_periodic_extension():
    eng = engine("A", 3, weights=(1, 2, 4))
    for d in range(-20, 30):
        assert closed_form_word(3, (1, 2, 4), d) == eng.fast_word(eng.sys.theta, d)


def test_bcd_examples():
    c, m = (1, 2, 6, 12), (2, 2, 2, 1)
    full = bcd_multiset(c, m, sum(x * y for x, y in zip(c, m)))
    assert full == {(1, 1): 2, (2, 2): 2, (3, 6): 2, (4, 12): 1}
    assert bcd_multiset(c, m, 1) == {(1, 0): 2, (2, 0): 2, (3, 0): 2, (4, 1): 1}
    with pytest.raises(ValueError):
        bcd_multiset(c, m, 0)


@st.composite
def chains(draw):
    n = draw(st.integers(1, 5))
    c = [draw(st.integers(1, 3))]
    for _ in range(n - 1):
        c.append(c[-1] * draw(st.integers(1, 3)))
    return tuple(c)


@settings(max_examples=40, deadline=None)
@given(chains())
def test_table_statistics_and_closed_form(c):
    n = len(c)
    table = build_table(n, c)
    counts = table.prefix_counts(len(table))
    assert all(counts[i] == c[i - 1] for i in range(1, n + 1))
    prev = table.prefix_counts(0)
    for d in range(1, len(table) + 1):
        cur = table.prefix_counts(d)
        assert all(cur[i] >= prev[i] for i in range(1, n + 1))
        prev = cur
    eng = engine("A", n, weights=c)
    for d in range(1, sum(c) + 1):
        assert closed_form_word(n, c, d) == eng.fast_word(eng.sys.theta, d)
