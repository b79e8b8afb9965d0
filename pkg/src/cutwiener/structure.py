"""Blocks, cut vertices and the pendant / s-pendant block taxonomy."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    all_pairs_distances,
    component_mask,
    delete_edge,
    is_connected,
    iter_bits,
)

NON_PENDANT = "non-pendant"
PENDANT = "pendant"
S_PENDANT = "s-pendant"


@dataclass(frozen=True)
class BlockCutDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    s_pendant_vertices: frozenset[int]
    s_pendant_edges: frozenset[tuple[int, int]]

    @property
    def k(self) -> int:
        return len(self.cut_vertices)

    def is_pendant(self, b: int) -> bool:
        return self.kinds[b] != NON_PENDANT

    @cached_property
    def pendant_blocks(self) -> tuple[int, ...]:
        return tuple(b for b in range(len(self.blocks)) if self.is_pendant(b))

    def cut_vertices_of(self, b: int) -> list[int]:
        return [v for v in self.blocks[b] if v in self.cut_vertices]

    def blocks_at(self, v: int) -> list[int]:
        return [b for b, blk in enumerate(self.blocks) if v in blk]


def _block_masks(rows: tuple[int, ...]) -> list[int]:
    """Hopcroft-Tarjan with an explicit edge stack; one bitmask per block."""
    n = len(rows)
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1 or not rows[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter_bits(rows[root]))]
        while stack:
            u, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, u, iter_bits(rows[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                verts = 0
                while True:
                    a, b = edge_stack.pop()
                    verts |= (1 << a) | (1 << b)
                    if a == p and b == u:
                        break
                blocks.append(verts)
    return blocks


def cut_vertex_mask(rows: tuple[int, ...]) -> int:
    """Bitmask of cut vertices of a connected graph given by ``rows``."""
    n = len(rows)
    full = (1 << n) - 1
    mask = 0
    for v in range(n):
        if rows[v].bit_count() < 2:
            continue
        rest = full ^ (1 << v)
        start = (rest & -rest).bit_length() - 1
        if component_mask(rows, start, rest) != rest:
            mask |= 1 << v
    return mask


def decompose(g: Graph) -> BlockCutDecomposition:
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition requires a connected graph")
    masks = _block_masks(g.rows)
    blocks = sorted(tuple(iter_bits(m)) for m in masks)
    count: dict[int, int] = {}
    for blk in blocks:
        for v in blk:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)

    n_cut = [sum(1 for v in blk if v in cuts) for blk in blocks]
    pendant = [c == 1 for c in n_cut]
    kinds = [PENDANT if p else NON_PENDANT for p in pendant]
    s_vertices = set()
    s_edges = set()
    if len(cuts) >= 2:
        for b, blk in enumerate(blocks):
            if not pendant[b]:
                continue
            (w,) = [v for v in blk if v in cuts]
            neighbours_non_pendant = sum(
                1 for b2, other in enumerate(blocks) if b2 != b and w in other and not pendant[b2]
            )
            if neighbours_non_pendant == 1:
                kinds[b] = S_PENDANT
                if len(blk) == 2:
                    s_edges.add(blk)
                    s_vertices.update(v for v in blk if v != w)
    return BlockCutDecomposition(
        cut_vertices=cuts,
        blocks=tuple(blocks),
        kinds=tuple(kinds),
        s_pendant_vertices=frozenset(s_vertices),
        s_pendant_edges=frozenset(s_edges),
    )


def count_cut_vertices(g: Graph) -> int:
    if not is_connected(g):
        raise DisconnectedGraphError("cut vertices are counted on connected graphs only")
    return cut_vertex_mask(g.rows).bit_count()


def block_distance(g: Graph, b1: int, b2: int, decomposition: BlockCutDecomposition | None = None) -> int:
    dec = decomposition or decompose(g)
    nb = len(dec.blocks)
    if not (0 <= b1 < nb and 0 <= b2 < nb):
        raise GraphError(f"block index out of range (graph has {nb} blocks)")
    dist = all_pairs_distances(g)
    return int(min(dist[u, v] for u in dec.blocks[b1] for v in dec.blocks[b2]))


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertex_mask(g.rows) == 0


def is_minimally_two_connected(g: Graph) -> bool:
    if not is_two_connected(g):
        return False
    return not any(is_two_connected(delete_edge(g, u, v)) for u, v in g.edges())
