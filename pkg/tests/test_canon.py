import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutwiener import families as fam
from cutwiener.canon import (
    CanonicalBudgetExceeded,
    canonical_certificate,
    canonical_form,
    canonical_labeling,
    graph_from_certificate,
    orbits,
)
from cutwiener.graph import Graph, GraphError


@st.composite
def labelled_pair(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])
    perm = draw(st.permutations(range(n)))
    return g, g.relabel(perm)


@given(labelled_pair())
@settings(max_examples=500, deadline=None)
def test_relabelling_invariance(pair):
    g, h = pair
    assert canonical_certificate(g) == canonical_certificate(h)


def test_path_relabelled():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_certificate(a) == canonical_certificate(b)


def test_distinguishes_c4_from_star():
    assert canonical_certificate(fam.build(fam.cycle(4))) != canonical_certificate(fam.build(fam.star(4)))


def test_certificate_roundtrip():
    g = fam.build(fam.dumbbell(4, 5, 10))
    cert = canonical_certificate(g)
    assert graph_from_certificate(cert) == canonical_form(g)
    assert nx.is_isomorphic(_nx(g), _nx(canonical_form(g)))


def test_brute_force_class_counts():
    # every labelled graph, collapsed to isomorphism classes by certificate
    total = [1, 2, 4, 11, 34, 156]
    for n, expected in zip(range(1, 7), total):
        pairs = list(itertools.combinations(range(n), 2))
        certs = set()
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            certs.add(canonical_certificate(g))
        assert len(certs) == expected


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(5, 9)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        edges2 = [(i, j) for i, j in edges]
        if edges2 and rng.random() < 0.5:
            edges2.pop(rng.randrange(len(edges2)))
            edges2.append(next((i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges))
        h = Graph.from_edges(n, edges2).relabel(rng.sample(range(n), n))
        same = nx.is_isomorphic(_nx(g), _nx(h))
        assert (canonical_certificate(g) == canonical_certificate(h)) == same


def _nx(g):
    x = nx.empty_graph(g.n)
    x.add_edges_from(g.edges())
    return x


@pytest.mark.parametrize("g", [
    fam.build(fam.cycle(12)),
    Graph.from_edges(10, [(i, j) for i in range(10) for j in range(i + 1, 10)]),
    Graph.empty(10),
    Graph.from_edges(16, [(i, j) for i in range(16) for j in range(16) if i < j and bin(i ^ j).count("1") == 1]),
])
def test_symmetric_graphs_and_orbits(g):
    canon, order, gens = canonical_labeling(g.rows)
    assert sorted(order) == list(range(g.n))
    for perm in gens:
        assert g.relabel([perm.index(i) for i in range(g.n)]) == g
    if g.num_edges in (0, g.n * (g.n - 1) // 2) or g.n in (12, 16):
        assert set(orbits(g.n, gens)) == {0}


def test_order_limit():
    with pytest.raises(GraphError):
        canonical_certificate(Graph.empty(33))


def test_budget():
    with pytest.raises(CanonicalBudgetExceeded):
        canonical_labeling(fam.build(fam.cycle(12)).rows, budget=1)
