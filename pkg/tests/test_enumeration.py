import io
import itertools
from collections import Counter

import pytest

from cutwiener import families as fam
from cutwiener.canon import canonical_certificate, certificate_bytes
from cutwiener.enumeration import (
    EnumerationConfig,
    EnumerationError,
    _class_certs,
    class_size,
    connected_rows,
    generate_class,
    generate_connected,
    glue_at,
    ingest_graph6,
)
from cutwiener.graph import Graph, is_connected
from cutwiener.graph6 import Graph6Error, encode
from cutwiener.structure import count_cut_vertices

CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
TWO_CONNECTED = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123}


def certs(graphs):
    return [canonical_certificate(g) for g in graphs]


@pytest.mark.parametrize("n, expected", CONNECTED.items())
def test_connected_counts(n, expected):
    out = certs(generate_connected(n))
    assert len(out) == expected == len(set(out))
    assert out == sorted(out)


def labelled_connected(n):
    """Labelled connected graphs on ``n`` vertices covering every isomorphism class.

    Vertex 0 is taken to have maximum degree ``d`` and neighbours ``1..d``; every
    graph has such a labelling, so the set of certificates is complete.
    """
    rest = list(itertools.combinations(range(1, n), 2))
    for d in range(1, n):
        star = [(0, v) for v in range(1, d + 1)]
        for mask in range(1 << len(rest)):
            g = Graph.from_edges(n, star + [p for i, p in enumerate(rest) if mask >> i & 1])
            if max(g.degree(v) for v in range(n)) == d and is_connected(g):
                yield g


@pytest.mark.parametrize("n", range(2, 8))
def test_brute_force_agreement(n):
    assert set(certs(labelled_connected(n))) == set(certs(generate_connected(n)))


def test_reduced_labelling_is_complete():
    pairs = list(itertools.combinations(range(5), 2))
    full = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            full.add(canonical_certificate(g))
    assert full == set(certs(labelled_connected(5)))


@pytest.mark.parametrize("partitions", [1, 2, 8])
def test_partition_invariance(partitions):
    baseline = Counter(connected_rows(7))
    assert Counter(connected_rows(7, partitions=partitions, cache=False)) == baseline


@pytest.mark.parametrize("partitions", [2, 8])
def test_class_partition_invariance(partitions):
    for k in (1, 2, 3):
        assert _class_certs(8, k, partitions=partitions) == _class_certs(8, k)


@pytest.mark.parametrize("n", range(3, 9))
def test_class_partition(n):
    sizes = [class_size(n, k) for k in range(n - 1)]
    assert sum(sizes) == CONNECTED[n]
    assert sizes[0] == TWO_CONNECTED[n]
    assert sizes[-1] == 1


@pytest.mark.parametrize("n", range(4, 8))
def test_glued_classes_match_filtered_stream(n):
    for k in range(1, n - 1):
        filtered = set(certs(generate_connected(EnumerationConfig(n=n, k=k))))
        glued = certs(generate_class(n, k))
        assert set(glued) == filtered and len(glued) == len(filtered)
        assert all(count_cut_vertices(g) == k for g in generate_class(n, k))


def test_class_4_1():
    expected = {canonical_certificate(fam.build(fam.lollipop(4, 3))), canonical_certificate(fam.build(fam.star(4)))}
    assert set(certs(generate_class(4, 1))) == expected


def test_class_path_only():
    assert certs(generate_class(5, 3)) == [canonical_certificate(fam.build(fam.path(5)))]


def test_class_6_0():
    graphs = list(generate_class(6, 0))
    assert len(graphs) == 56
    assert all(count_cut_vertices(g) == 0 for g in graphs)


@pytest.mark.parametrize("n, k", [(5, 4), (5, -1), (0, 0), (2, 1)])
def test_class_out_of_range(n, k):
    with pytest.raises(EnumerationError):
        list(generate_class(n, k))


def test_generation_cap():
    with pytest.raises(EnumerationError):
        list(generate_connected(11))
    with pytest.raises(EnumerationError):
        list(generate_class(10, 8, max_n=9))


def test_triangle_free_and_disconnected_filters():
    tf = list(generate_connected(EnumerationConfig(n=6, triangle_free_only=True)))
    assert len(tf) == 19
    everything = list(generate_connected(EnumerationConfig(n=5, connected_only=False)))
    assert len(everything) == 34


def test_glue_at_keeps_host_labels():
    host = fam.build(fam.cycle(4)).rows
    rows = glue_at(host, 2, fam.build(fam.path(2)).rows, 0)
    g = Graph(len(rows), rows)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3), (2, 4)]


class TestIngest:
    LINES = [encode(fam.build(fam.cycle(4))), encode(fam.build(fam.cycle(5))),
             encode(Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]))]

    def stream(self, lines):
        return io.StringIO("\n".join(lines) + "\n")

    def test_k_filter_keeps_all(self):
        out = list(ingest_graph6(self.stream(self.LINES), EnumerationConfig(n=4, k=0)))
        assert [g.n for g in out] == [4, 5, 4]

    def test_triangle_free_filter(self):
        out = list(ingest_graph6(self.stream(self.LINES), EnumerationConfig(n=4, triangle_free_only=True)))
        assert [encode(g) for g in out] == self.LINES[:2]

    def test_strict_aborts_with_line_number(self):
        lines = self.LINES[:1] + ["C!!"] + self.LINES[1:]
        with pytest.raises(Graph6Error) as info:
            list(ingest_graph6(self.stream(lines)))
        assert info.value.line_number == 2

    def test_lenient_collects_errors(self):
        lines = self.LINES[:1] + ["C!!"] + self.LINES[1:]
        errors: list = []
        out = list(ingest_graph6(self.stream(lines), strict=False, errors=errors))
        assert len(out) == 3 and [e.line_number for e in errors] == [2]

    def test_no_order_cap(self):
        big = fam.build(fam.cycle(40))
        assert list(ingest_graph6([encode(big)])) == [big]


def test_certificate_bytes_length():
    cert = certificate_bytes(fam.build(fam.path(6)).rows)
    assert cert[0] == 6 and len(cert) > 1
