from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import CUBIC_B
from rncbetti import BBettiTable, ParseError, SBettiTable
from rncbetti.tableio import TableDocument, parse_table, render_betti, render_m2

CUBIC_BLOCK = """\
0 1 2 3 4 5
total: 1 3 5 9 18 36
0: 1 1 . . . .
1: . 2 5 9 18 36 ...
"""

# pasted with the aligned padding of a typical display
PADDED_S = """\
       0 1 2
total: 1 6 5
    0: 1 . .
    1: . . .
    2: . . .
    3: . . .
    4: . 6 5
"""


def test_render_cubic_example_block():
    doc = TableDocument.of(BBettiTable(3, CUBIC_B))
    assert render_m2(doc, 5, header=False) == CUBIC_BLOCK


def test_render_with_header():
    doc = TableDocument.of(BBettiTable(3, CUBIC_B), command="x")
    assert render_m2(doc).startswith("# kind: B\n# d: 3\n# command: x\n0 1 2")


def test_render_zero_table():
    assert render_m2(TableDocument.of(BBettiTable(3)), 5, header=False) == "0 1 2 3 4 5\ntotal: 0 0 0 0 0 0\n"
    assert render_m2(TableDocument.of(SBettiTable()), header=False) == "0 1 2\ntotal: 0 0 0\n"


def test_render_fractions_and_d1():
    doc = TableDocument.of(BBettiTable(1, {(0, 0): Fraction(1, 2), (1, 1): 1, (2, 2): Fraction(1, 2)}))
    assert render_m2(doc, 3, header=False) == "0 1 2 3\ntotal: 1/2 1 1/2 0\n0: 1/2 1 1/2 .\n"


def test_render_rejects_narrow():
    with pytest.raises(ValueError):
        render_m2(TableDocument.of(BBettiTable(3)), 1)


def test_parse_padded_block():
    doc = parse_table(PADDED_S, kind="S")
    assert doc.kind == "S"
    assert doc.table == SBettiTable({(0, 0): 1, (1, 5): 6, (2, 6): 5})


def test_parse_cubic_block():
    doc = parse_table(CUBIC_BLOCK, d=3)
    assert doc.table == BBettiTable(3, CUBIC_B)


@pytest.mark.parametrize(
    "src, msg",
    [
        ("0 1 2\n0: 1 x .\n", "non-numeric"),
        ("0 1 2\nzero: 1 . .\n", "row label"),
        ("0 1 2\n0: 1 .\n", "cells"),
        ("0 2 1\n0: 1 . .\n", "header"),
    ],
)
def test_parse_errors(src, msg):
    with pytest.raises(ParseError) as exc:
        parse_table(src, kind="S")
    assert msg in str(exc.value)


def test_parse_b_errors():
    with pytest.raises(ParseError):
        parse_table(CUBIC_BLOCK)  # no d
    with pytest.raises(ParseError):
        parse_table(CUBIC_BLOCK.replace("36 ...", "35 ..."), d=3)
    with pytest.raises(ParseError):
        parse_table("# d: 2\n" + CUBIC_BLOCK, d=3)


def test_json_layout():
    doc = TableDocument.of(SBettiTable({(0, 0): 1, (2, 3): Fraction(2, 3)}))
    assert render_betti(doc, "json") == '{\n  "entries": [\n    [0, 0, "1"],\n    [2, 3, "2/3"]\n  ],\n  "kind": "S"\n}\n'


def test_json_errors():
    with pytest.raises(ParseError):
        parse_table("{not json")
    with pytest.raises(ParseError):
        parse_table('{"kind": "S"}')
    with pytest.raises(ParseError):
        parse_table('{"kind": "S", "entries": [[0, "a", "1"]]}')


entries = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(-3, 8)),
    st.fractions(min_value=-30, max_value=30, max_denominator=7),
    max_size=10,
)


@given(entries, st.integers(1, 5), st.integers(2, 7), st.sampled_from(["m2", "json"]))
def test_b_roundtrip(e, d, cols, fmt):
    doc = TableDocument.of(BBettiTable(d, e), seed=7)
    back = parse_table(render_betti(doc, fmt, cols))
    assert back.table == doc.table
    assert back.d == d
    assert back.meta == {"seed": "7"}


@given(entries, st.sampled_from(["m2", "json"]))
def test_s_roundtrip(e, fmt):
    t = SBettiTable({k: v for k, v in e.items() if k[0] <= 2})
    back = parse_table(render_betti(TableDocument.of(t), fmt))
    assert back.kind == "S"
    assert back.table == t
