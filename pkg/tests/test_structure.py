import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutwiener import families as fam
from cutwiener.enumeration import connected_rows
from cutwiener.graph import DisconnectedGraphError, Graph, GraphError, is_connected
from cutwiener.structure import (
    NON_PENDANT,
    PENDANT,
    S_PENDANT,
    block_distance,
    count_cut_vertices,
    decompose,
    is_minimally_two_connected,
    is_two_connected,
)

# Three cut vertices (2, 5, 14): a 4-cycle and a 6-cycle meet at 2, a second
# 4-cycle and three bridges hang at 5, and one more bridge hangs off 14.
S_PENDANT_EXAMPLE = Graph.from_edges(16, [
    (0, 1), (1, 2), (2, 8), (8, 0),                       # B1: 4-cycle at 2
    (2, 3), (3, 4), (4, 5), (5, 10), (10, 9), (9, 2),     # B2: 6-cycle through 2 and 5
    (5, 6), (6, 7), (7, 11), (11, 5),                     # B3: 4-cycle at 5
    (5, 12), (5, 13),                                     # two pendant edges at 5
    (5, 14), (14, 15),                                    # bridge 5-14, pendant edge 14-15
])


def blk(dec, vertices):
    return dec.blocks.index(tuple(sorted(vertices)))


class TestDecompose:
    def test_path(self):
        dec = decompose(fam.build(fam.path(5)))
        assert dec.k == 3 and len(dec.blocks) == 4
        assert [dec.is_pendant(b) for b in range(4)] == [True, False, False, True]

    def test_lollipop_and_dumbbell_counts(self):
        assert decompose(fam.build(fam.lollipop(8, 6))).k == 2
        assert count_cut_vertices(fam.build(fam.dumbbell(4, 4, 8))) == 2
        assert count_cut_vertices(fam.build(fam.cycle(9))) == 0
        assert count_cut_vertices(fam.build(fam.star(6))) == 1

    def test_s_pendant_taxonomy(self):
        dec = decompose(S_PENDANT_EXAMPLE)
        assert dec.cut_vertices == {2, 5, 14}
        b1, b2, b3 = blk(dec, [0, 1, 2, 8]), blk(dec, [2, 3, 4, 5, 9, 10]), blk(dec, [5, 6, 7, 11])
        e1, e2, e3, e4 = blk(dec, [5, 12]), blk(dec, [5, 13]), blk(dec, [14, 15]), blk(dec, [5, 14])
        assert dec.kinds[b1] == S_PENDANT
        assert dec.kinds[b2] == NON_PENDANT and dec.kinds[e4] == NON_PENDANT
        assert dec.kinds[b3] == PENDANT
        assert dec.kinds[e1] == PENDANT and dec.kinds[e2] == PENDANT
        assert dec.kinds[e3] == S_PENDANT
        assert dec.s_pendant_edges == {(14, 15)}
        assert dec.s_pendant_vertices == {15}

    def test_single_block_is_not_pendant(self):
        for g in (fam.build(fam.path(2)), fam.build(fam.cycle(5))):
            dec = decompose(g)
            assert len(dec.blocks) == 1 and dec.kinds == (NON_PENDANT,)

    def test_single_vertex_has_no_blocks(self):
        dec = decompose(Graph.empty(1))
        assert dec.blocks == () and dec.k == 0

    def test_s_pendant_needs_two_cut_vertices(self):
        dec = decompose(fam.build(fam.star(5)))
        assert S_PENDANT not in dec.kinds

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            decompose(Graph.empty(2))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_block_invariants_exhaustive(self, n):
        for rows in connected_rows(n):
            g = Graph.trusted(rows)
            dec = decompose(g)
            edge_owner = {}
            for b, block in enumerate(dec.blocks):
                s = set(block)
                for u, v in g.edges():
                    if u in s and v in s:
                        assert (u, v) not in edge_owner
                        edge_owner[(u, v)] = b
            assert len(edge_owner) == g.num_edges
            for v in range(n):
                count = len(dec.blocks_at(v))
                assert count >= 2 if v in dec.cut_vertices else count == 1
            for i in range(len(dec.blocks)):
                for j in range(i + 1, len(dec.blocks)):
                    common = set(dec.blocks[i]) & set(dec.blocks[j])
                    assert len(common) <= 1 and common <= dec.cut_vertices
            for b in range(len(dec.blocks)):
                if dec.kinds[b] != NON_PENDANT:
                    assert len(dec.cut_vertices_of(b)) == 1
                if dec.kinds[b] == S_PENDANT:
                    assert dec.k >= 2


@st.composite
def connected_graphs(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    # random spanning tree plus extra edges keeps the graph connected
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph.from_edges(n, edges)


@given(connected_graphs())
@settings(max_examples=300, deadline=None)
def test_matches_networkx(g):
    h = nx.Graph(g.edges())
    assert set(decompose(g).cut_vertices) == set(nx.articulation_points(h))
    ours = {frozenset(b) for b in decompose(g).blocks}
    theirs = {frozenset(c) for c in nx.biconnected_components(h)}
    assert ours == theirs


class TestBlockDistance:
    def test_adjacent_blocks(self):
        g = fam.build(fam.lollipop(8, 6))
        dec = decompose(g)
        assert block_distance(g, blk(dec, range(6)), blk(dec, [0, 6])) == 0

    def test_lollipop_cycle_to_pendant_edge(self):
        g = fam.build(fam.lollipop(8, 6))
        dec = decompose(g)
        assert block_distance(g, blk(dec, range(6)), blk(dec, [6, 7])) == 1

    def test_path_ends(self):
        g = fam.build(fam.path(6))
        dec = decompose(g)
        assert block_distance(g, blk(dec, [0, 1]), blk(dec, [4, 5])) == 3

    def test_bad_index(self):
        with pytest.raises(GraphError):
            block_distance(fam.build(fam.path(3)), 0, 5)


class TestTwoConnectivity:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_cycles_are_minimal(self, n):
        assert is_minimally_two_connected(fam.build(fam.cycle(n)))

    def test_k4_is_not_minimal(self):
        k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert is_two_connected(k4) and not is_minimally_two_connected(k4)

    def test_path_is_not_two_connected(self):
        assert not is_minimally_two_connected(fam.build(fam.path(4)))

    def test_tiny_graphs(self):
        assert not is_two_connected(fam.build(fam.path(2)))
        assert is_connected(fam.build(fam.path(2)))
