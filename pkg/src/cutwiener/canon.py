"""Canonical labelling by individualisation-refinement.

The root partition groups vertices by degree and is refined to the coarsest
equitable partition.  When that is not already discrete, the root is rebuilt
from distance profiles (how many vertices sit at each hop count, degree being
the first entry) and refined again.  Whether the cheap pass suffices depends
only on the isomorphism class, so the result stays canonical.  From there the
search individualises one vertex of the first smallest non-singleton cell at a
time.  Every discrete leaf yields a
relabelled adjacency; the lexicographically smallest one is the canonical form.

Pruning uses automorphisms discovered when two leaves coincide: the search
jumps back to where the two paths diverge, and at every node skips children in
the same orbit (under the stored automorphisms that fix the current prefix)
as a child already explored.
"""

from __future__ import annotations

from .graph import Graph, GraphError, bfs_layers

MAX_CANON_ORDER = 32
DEFAULT_NODE_BUDGET = 1_000_000


class CanonicalBudgetExceeded(RuntimeError):
    """The search tree grew past its node budget."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _refine(rows: tuple[int, ...], cells: list[int], splitters: list[int]) -> list[int]:
    """Coarsest equitable refinement of the ordered partition ``cells``."""
    n = len(rows)
    while splitters and len(cells) < n:
        w = splitters.pop()
        new_cells: list[int] = []
        for cell in cells:
            if not cell & (cell - 1):
                new_cells.append(cell)
                continue
            groups: dict[int, int] = {}
            c = cell
            while c:
                low = c & -c
                key = (rows[low.bit_length() - 1] & w).bit_count()
                groups[key] = groups.get(key, 0) | low
                c ^= low
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for key in sorted(groups):
                frag = groups[key]
                new_cells.append(frag)
                splitters.append(frag)
        cells = new_cells
    return cells


def _initial_cells(rows: tuple[int, ...]) -> list[int]:
    n = len(rows)
    keyed: dict[tuple[int, ...], int] = {}
    for v in range(n):
        layers = bfs_layers(rows, v)
        profile = tuple(layer.bit_count() for layer in layers[1:])
        keyed[profile] = keyed.get(profile, 0) | (1 << v)
    return [keyed[key] for key in sorted(keyed)]


def _degree_cells(rows: tuple[int, ...]) -> list[int]:
    keyed: dict[int, int] = {}
    for v, r in enumerate(rows):
        d = r.bit_count()
        keyed[d] = keyed.get(d, 0) | (1 << v)
    return [keyed[d] for d in sorted(keyed)]


class _Search:
    __slots__ = (
        "rows", "n", "budget", "nodes", "first_code", "first_order", "first_path",
        "best_code", "best_order", "best_path", "generators",
    )

    def __init__(self, rows: tuple[int, ...], budget: int) -> None:
        self.rows = rows
        self.n = len(rows)
        self.budget = budget
        self.nodes = 0
        self.first_code: tuple[int, ...] | None = None
        self.first_order: list[int] = []
        self.first_path: list[int] = []
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.generators: list[list[int]] = []

    def _leaf(self, cells: list[int], path: list[int]) -> int | None:
        rows = self.rows
        order = [c.bit_length() - 1 for c in cells]
        label = [0] * self.n
        for i, v in enumerate(order):
            label[v] = i
        code = []
        for v in order:
            r = 0
            m = rows[v]
            while m:
                low = m & -m
                r |= 1 << label[low.bit_length() - 1]
                m ^= low
            code.append(r)
        code_t = tuple(code)
        if self.first_code is None:
            self.first_code = self.best_code = code_t
            self.first_order = self.best_order = order
            self.first_path = self.best_path = list(path)
            return None
        if code_t == self.first_code:
            self._store(self.first_order, order)
            return _common_prefix(path, self.first_path)
        if code_t == self.best_code:
            self._store(self.best_order, order)
            return _common_prefix(path, self.best_path)
        if code_t < self.best_code:
            self.best_code = code_t
            self.best_order = order
            self.best_path = list(path)
        return None

    def _store(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        self.generators.append(perm)

    def _orbit_rep(self, path: list[int], cell: int) -> dict[int, int]:
        """Union-find parents over ``cell`` under generators fixing ``path``."""
        parent = {v: v for v in _bits(cell)}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.generators:
            if any(perm[p] != p for p in path):
                continue
            for v in parent:
                a, b = find(v), find(perm[v])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        return {v: find(v) for v in parent}

    def run(self, cells: list[int], path: list[int]) -> int | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise CanonicalBudgetExceeded(f"canonical search exceeded {self.budget} nodes")
        target_idx = -1
        best_size = self.n + 1
        for i, c in enumerate(cells):
            s = c.bit_count()
            if 1 < s < best_size:
                best_size = s
                target_idx = i
                if s == 2:
                    break
        if target_idx < 0:
            return self._leaf(cells, path)
        target = cells[target_idx]
        depth = len(path)
        done_roots: set[int] = set()
        n_gens_seen = -1
        reps: dict[int, int] = {}
        for v in _bits(target):
            if done_roots:
                if len(self.generators) != n_gens_seen:
                    reps = self._orbit_rep(path, target)
                    n_gens_seen = len(self.generators)
                    done_roots = {reps[u] for u in done_roots}
                if reps.get(v, v) in done_roots:
                    continue
            bit = 1 << v
            child = cells[:target_idx] + [bit, target ^ bit] + cells[target_idx + 1:]
            child = _refine(self.rows, child, [bit])
            path.append(v)
            back = self.run(child, path)
            path.pop()
            if back is not None and back < depth:
                return back
            done_roots.add(reps.get(v, v))
        return None


def _common_prefix(a: list[int], b: list[int]) -> int:
    i = 0
    for x, y in zip(a, b):
        if x != y:
            break
        i += 1
    return i


def canonical_labeling(
    rows: tuple[int, ...], budget: int = DEFAULT_NODE_BUDGET
) -> tuple[tuple[int, ...], list[int], list[list[int]]]:
    """Return ``(canonical rows, order, automorphism generators)``.

    ``order[i]`` is the input vertex that receives canonical label ``i``.
    """
    n = len(rows)
    if n > MAX_CANON_ORDER:
        raise GraphError(f"canonical labelling supports n <= {MAX_CANON_ORDER}, got {n}")
    cells = _degree_cells(rows)
    cells = _refine(rows, cells, list(cells))
    if len(cells) < n:
        cells = _initial_cells(rows)
        cells = _refine(rows, cells, list(cells))
    search = _Search(rows, budget)
    search.run(cells, [])
    assert search.best_code is not None
    return search.best_code, search.best_order, search.generators


def canonical_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    return canonical_labeling(rows)[0]


def certificate_bytes(canonical: tuple[int, ...]) -> bytes:
    """Order byte plus fixed-width big-endian rows; byte order agrees with tuple order."""
    n = len(canonical)
    width = (n + 7) // 8
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in canonical)


def canonical_certificate(g: Graph) -> bytes:
    return certificate_bytes(canonical_rows(g.rows))


def canonical_form(g: Graph) -> Graph:
    return Graph.trusted(canonical_rows(g.rows))


def graph_from_certificate(cert: bytes) -> Graph:
    n = cert[0]
    width = (n + 7) // 8
    body = cert[1:]
    return Graph(n, tuple(int.from_bytes(body[i * width:(i + 1) * width], "big") for i in range(n)))


def orbits(n: int, generators: list[list[int]]) -> list[int]:
    """Smallest member of each vertex's orbit under the group the generators span."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]
