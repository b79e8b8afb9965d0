import io

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutwiener import families as fam
from cutwiener.graph import Graph
from cutwiener.graph6 import (
    Graph6CharacterError,
    Graph6Error,
    Graph6HeaderError,
    Graph6LengthError,
    decode,
    encode,
    read_lines,
    write_lines,
)


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(1, min(max_n, 64)))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=80))
    return Graph.from_edges(n, edges)


def test_single_edge():
    assert encode(fam.build(fam.path(2))) == "A_"


def test_roundtrip_cycle():
    c9 = fam.build(fam.cycle(9))
    assert decode(encode(c9)) == c9


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_roundtrip_and_networkx_agreement(g):
    line = encode(g)
    assert decode(line) == g
    h = nx.from_graph6_bytes(line.encode())
    assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()


def test_long_order_header():
    g = fam.build(fam.cycle(64))
    line = encode(g)
    assert line[0] == "~"
    assert decode(line) == g


def test_header_is_accepted():
    assert decode(">>graph6<<A_") == fam.build(fam.path(2))


@pytest.mark.parametrize("line, err", [
    ("A!", Graph6CharacterError),
    ("C~~", Graph6LengthError),
    ("C", Graph6LengthError),
    ("", Graph6HeaderError),
    ("A`", Graph6Error),
])
def test_malformed(line, err):
    with pytest.raises(err):
        decode(line)


def test_read_lines_reports_line_numbers():
    text = "A_\n\nC!\nBw\n"
    with pytest.raises(Graph6Error) as info:
        list(read_lines(io.StringIO(text)))
    assert info.value.line_number == 3
    assert "line 3" in str(info.value)
    lenient = list(read_lines(io.StringIO(text), strict=False))
    assert [n for n, _ in lenient] == [1, 3, 4]
    assert isinstance(lenient[1][1], Graph6Error)


def test_write_lines():
    buf = io.StringIO()
    write_lines([fam.build(fam.path(2)), fam.build(fam.cycle(3))], buf)
    assert buf.getvalue() == "A_\nBw\n"
