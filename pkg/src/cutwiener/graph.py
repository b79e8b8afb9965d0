"""Small immutable graphs stored as per-vertex adjacency bitmasks.

Vertex ``i`` is adjacent to ``j`` iff bit ``j`` of ``rows[i]`` is set.  Every
query here works directly on those integer rows, so breadth-first search is a
handful of bitwise ORs per layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_ORDER = 64
UNREACHABLE = np.iinfo(np.uint16).max


class GraphError(ValueError):
    """Invalid graph construction or an operation applied to the wrong kind of graph."""


class DisconnectedGraphError(GraphError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex >= {self.n}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def trusted(cls, rows: tuple[int, ...]) -> Graph:
        """Wrap rows already known to be valid (hot paths in enumeration)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.rows[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def relabel(self, order: list[int] | tuple[int, ...]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        label = [0] * self.n
        for i, v in enumerate(order):
            label[v] = i
        rows = []
        for v in order:
            r = 0
            for w in iter_bits(self.rows[v]):
                r |= 1 << label[w]
            rows.append(r)
        return Graph.trusted(tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        return self.relabel(sorted(vertices))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- distances -----------------------------------------------------------------


def bfs_layers(rows: tuple[int, ...], source: int) -> list[int]:
    """Distance layers from ``source`` as bitmasks; layer 0 is the source itself."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def _distance_sum(rows: tuple[int, ...], source: int) -> tuple[int, int]:
    """(sum of distances to reached vertices, number of reached vertices)."""
    seen = 1 << source
    frontier = seen
    total = 0
    reached = 1
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        seen |= nxt
        c = nxt.bit_count()
        total += d * c
        reached += c
        frontier = nxt
    return total, reached


def all_pairs_distances(g: Graph) -> np.ndarray:
    """n x n uint16 hop-count matrix; ``UNREACHABLE`` between components."""
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.uint16)
    for s in range(g.n):
        for d, layer in enumerate(bfs_layers(g.rows, s)):
            for v in iter_bits(layer):
                dist[s, v] = d
    return dist


def component_mask(rows: tuple[int, ...], source: int, allowed: int | None = None) -> int:
    """Bitmask of the component containing ``source`` inside ``allowed`` vertices."""
    if allowed is None:
        allowed = (1 << len(rows)) - 1
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g.rows, 0) == (1 << g.n) - 1


def components(g: Graph) -> list[int]:
    left = (1 << g.n) - 1
    comps = []
    while left:
        c = component_mask(g.rows, (left & -left).bit_length() - 1)
        comps.append(c)
        left &= ~c
    return comps


def vertex_distance(g: Graph, v: int) -> int:
    """Sum of the distances from ``v`` to every vertex of the connected graph ``g``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")
    total, reached = _distance_sum(g.rows, v)
    if reached != g.n:
        raise DisconnectedGraphError("vertex distance is undefined on a disconnected graph")
    return total


def vertex_distances(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        total, reached = _distance_sum(g.rows, v)
        if reached != g.n:
            raise DisconnectedGraphError("vertex distance is undefined on a disconnected graph")
        out.append(total)
    return out


def wiener_index(g: Graph) -> int:
    return sum(vertex_distances(g)) // 2


def wiener_of_rows(rows: tuple[int, ...]) -> int:
    """Wiener index straight from rows, no connectivity check (caller guarantees it)."""
    total = 0
    for v in range(len(rows)):
        total += _distance_sum(rows, v)[0]
    return total // 2


def peripherian_vertices(g: Graph) -> list[int]:
    dists = vertex_distances(g)
    top = max(dists)
    return [v for v, d in enumerate(dists) if d == top]


def has_triangle(g: Graph) -> bool:
    rows = g.rows
    for u in range(g.n):
        higher = rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if rows[u] & rows[v]:
                return True
    return False


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph.trusted(tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or g.has_edge(u, v):
        raise GraphError(f"cannot add ({u}, {v})")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph.trusted(tuple(rows))


def is_bridge(g: Graph, u: int, v: int) -> bool:
    h = delete_edge(g, u, v)
    return not component_mask(h.rows, u) >> v & 1
