"""Isomorph-free generation of connected graphs and of the classes C(n, k).

Connected graphs are produced by canonical augmentation: every graph on
``n - 1`` vertices is extended by a new vertex joined to each non-empty subset
of the old vertices.  A child is kept only when the new vertex can serve as
its canonical deletion vertex, chosen among non-cut vertices by (degree,
neighbour degree sum) and then by canonical label, and when deleting that
vertex gives back the parent.  Children of one parent are deduplicated by
certificate.  Each isomorphism class therefore appears exactly once.

Graphs with ``k >= 1`` cut vertices are instead assembled by gluing: every
such graph is a smaller connected graph ``H`` with a pendant block ``B`` glued
on at one vertex.  Insisting that ``B`` is a smallest pendant block keeps the
amount of redundant work down; duplicates are removed by certificate.  This
route reaches ``n = 10`` quickly because it never touches the ~10^7
2-connected graphs on ten vertices.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator, TextIO

from .canon import canonical_labeling, canonical_rows, certificate_bytes, orbits
from .graph import Graph, GraphError, component_mask, has_triangle, is_connected
from .graph6 import Graph6Error, read_lines
from .structure import _block_masks, cut_vertex_mask

log = logging.getLogger(__name__)

GENERATION_CAP = 10
PROGRESS_EVERY = 100_000

Rows = tuple[int, ...]


class EnumerationError(GraphError):
    pass


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    k: int | None = None
    triangle_free_only: bool = False
    connected_only: bool = True
    partitions: int = 1
    workers: int = 1
    max_n: int = GENERATION_CAP

    def __post_init__(self) -> None:
        if self.partitions < 1 or self.workers < 1:
            raise EnumerationError("partitions and workers must be positive")
        if self.n < 1:
            raise EnumerationError("n >= 1 required")

    def accepts(self, g: Graph) -> bool:
        if self.connected_only and not is_connected(g):
            return False
        if self.k is not None:
            if not is_connected(g) or cut_vertex_mask(g.rows).bit_count() != self.k:
                return False
        if self.triangle_free_only and has_triangle(g):
            return False
        return True


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise EnumerationError(f"generation for n = {n} exceeds the cap max_n = {max_n}")


# -- canonical augmentation --------------------------------------------------------


def _parent_data(parent: Rows) -> tuple[list[int], list[list[int] | None]]:
    m = len(parent)
    deg = [r.bit_count() for r in parent]
    full = (1 << m) - 1
    comps: list[list[int] | None] = [None] * m
    for u in range(m):
        rest = full ^ (1 << u)
        if not rest or deg[u] < 2:
            continue
        parts = []
        left = rest
        while left:
            c = component_mask(parent, (left & -left).bit_length() - 1, rest)
            parts.append(c)
            left &= ~c
        if len(parts) > 1:
            comps[u] = parts
    return deg, comps


def _children(parent: Rows) -> list[Rows]:
    """Canonical children of one canonical parent, sorted."""
    m = len(parent)
    n = m + 1
    v = m
    vbit = 1 << v
    deg, comps = _parent_data(parent)
    by_degree = sorted(range(m), key=lambda u: -deg[u])
    seen: set[Rows] = set()

    for s in range(1, 1 << m):
        d = s.bit_count()

        def noncut(u: int) -> bool:
            parts = comps[u]
            if parts is None:
                return s != (1 << u)
            for c in parts:
                if not c & s:
                    return False
            return True

        ties = []
        reject = False
        for u in by_degree:
            du = deg[u] + (s >> u & 1)
            if deg[u] + 1 < d:
                break
            if du > d:
                if noncut(u):
                    reject = True
                    break
            elif du == d and noncut(u):
                ties.append(u)
        if reject:
            continue

        rows = [parent[u] | vbit if s >> u & 1 else parent[u] for u in range(m)]
        rows.append(s)
        if ties:
            degs = [deg[u] + (s >> u & 1) for u in range(m)]
            degs.append(d)

            def nsum(u: int) -> int:
                t = 0
                r = rows[u]
                while r:
                    low = r & -r
                    t += degs[low.bit_length() - 1]
                    r ^= low
                return t

            fv = nsum(v)
            close = []
            for u in ties:
                fu = nsum(u)
                if fu > fv:
                    reject = True
                    break
                if fu == fv:
                    close.append(u)
            if reject:
                continue
            ties = close

        g_rows = tuple(rows)
        canon, order, gens = canonical_labeling(g_rows)
        if ties:
            position = {u: i for i, u in enumerate(order)}
            star = max(ties + [v], key=position.__getitem__)
            if star != v:
                orb = orbits(n, gens)
                if orb[star] != orb[v]:
                    keep = [u for u in range(n) if u != star]
                    sub = _induced_rows(g_rows, keep)
                    if canonical_rows(sub) != parent:
                        continue
        seen.add(canon)
    return sorted(seen)


def _induced_rows(rows: Rows, keep: list[int]) -> Rows:
    label = {u: i for i, u in enumerate(keep)}
    out = []
    for u in keep:
        r = 0
        m = rows[u]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if w in label:
                r |= 1 << label[w]
            m ^= low
        out.append(r)
    return tuple(out)


def _children_batch(parents: list[Rows]) -> list[list[Rows]]:
    return [_children(p) for p in parents]


def _split(items: list, partitions: int) -> list[list[int]]:
    """Round-robin index partition."""
    return [list(range(i, len(items), partitions)) for i in range(partitions)]


def _map_partitions(fn: Callable, items: list, partitions: int, workers: int) -> list:
    """Apply ``fn`` to every item, grouped into partitions; results in item order."""
    groups = _split(items, partitions)
    payloads = [[items[i] for i in grp] for grp in groups]
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, payloads))
    else:
        parts = [fn(p) for p in payloads]
    out: list = [None] * len(items)
    for grp, res in zip(groups, parts):
        for i, r in zip(grp, res):
            out[i] = r
    return out


_LEVELS: dict[int, list[Rows]] = {1: [(0,)], 2: [(2, 1)]}


def connected_rows(n: int, partitions: int = 1, workers: int = 1, cache: bool = True) -> list[Rows]:
    """All connected graphs on ``n`` vertices as canonical rows, sorted by certificate.

    Levels below ``n`` always come from the cache; ``cache=False`` only forces
    the top level to be regenerated (used to check partition invariance).
    """
    if cache and n in _LEVELS:
        return _LEVELS[n]
    if n <= 2:
        return _LEVELS[n]
    parents = connected_rows(n - 1, partitions, workers)
    per_parent = _map_partitions(_children_batch, parents, partitions, workers)
    level = sorted(child for kids in per_parent for child in kids)
    log.info("connected graphs on %d vertices: %d", n, len(level))
    if cache and n < GENERATION_CAP:
        _LEVELS[n] = level
    return level


def _stream_top(n: int, partitions: int, workers: int) -> Iterator[Rows]:
    """Top level streamed: parents in certificate order, each parent's children sorted."""
    parents = connected_rows(n - 1, partitions, workers)
    chunk = 4096
    count = 0
    for start in range(0, len(parents), chunk):
        block = parents[start:start + chunk]
        for kids in _map_partitions(_children_batch, block, partitions, workers):
            yield from kids
            count += len(kids)
        log.info("n=%d: %d graphs after %d parents", n, count, start + len(block))


def generate_connected(config: EnumerationConfig | int) -> Iterator[Graph]:
    """One representative per isomorphism class, filtered by ``config``.

    Up to ``n = 9`` the level is materialised and sorted by certificate; at
    ``n = 10`` it is streamed parent by parent.  With ``connected_only=False``
    disconnected graphs are assembled from multisets of connected components.
    """
    if isinstance(config, int):
        config = EnumerationConfig(n=config)
    _check_cap(config.n, config.max_n)
    source: Iterable[Rows]
    if not config.connected_only:
        source = _all_rows(config.n)
    elif config.n < GENERATION_CAP:
        source = connected_rows(config.n, config.partitions, config.workers)
    else:
        source = _stream_top(config.n, config.partitions, config.workers)
    count = 0
    for rows in source:
        g = Graph.trusted(rows)
        if config.k is not None and (not is_connected(g) or cut_vertex_mask(rows).bit_count() != config.k):
            continue
        if config.triangle_free_only and has_triangle(g):
            continue
        count += 1
        if count % PROGRESS_EVERY == 0:
            log.info("n=%d: %d graphs emitted", config.n, count)
        yield g


def _integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def _disjoint_union(parts: Iterable[Rows]) -> Rows:
    out: list[int] = []
    for rows in parts:
        shift = len(out)
        out.extend(r << shift for r in rows)
    return tuple(out)


def _all_rows(n: int) -> list[Rows]:
    result = set()
    for sizes in _integer_partitions(n):
        groups: dict[int, int] = {}
        for s in sizes:
            groups[s] = groups.get(s, 0) + 1
        choices = [list(combinations_with_replacement(connected_rows(s), c)) for s, c in sorted(groups.items())]
        stack: list[tuple[int, list[Rows]]] = [(0, [])]
        while stack:
            i, acc = stack.pop()
            if i == len(choices):
                result.add(canonical_rows(_disjoint_union(acc)))
                continue
            for combo in choices[i]:
                stack.append((i + 1, acc + list(combo)))
    return sorted(result)


# -- classes C(n, k) -------------------------------------------------------------


@dataclass(frozen=True)
class _Piece:
    """A connected graph prepared for gluing: cut mask, vertex orbit reps, pendant sizes."""

    rows: Rows
    cuts: int
    reps: tuple[int, ...]
    min_pendant_without: tuple[int, ...]


def _prepare(rows: Rows) -> _Piece:
    n = len(rows)
    cuts = cut_vertex_mask(rows)
    _, _, gens = canonical_labeling(rows)
    orb = orbits(n, gens)
    reps = tuple(sorted(set(orb)))
    big = 10**9
    if not cuts:
        mins = tuple(n for _ in range(n))
    else:
        pendant = [b for b in _block_masks(rows) if (b & cuts).bit_count() == 1]
        mins_l = []
        for w in range(n):
            wbit = 1 << w
            sizes = [b.bit_count() for b in pendant if not (b & wbit and not cuts & wbit)]
            mins_l.append(min(sizes) if sizes else big)
        mins = tuple(mins_l)
    return _Piece(rows, cuts, reps, mins)


_PIECES: dict[tuple[int, int], list[_Piece]] = {}
_CLASS_CACHE: dict[tuple[int, int], list[bytes]] = {}


def _pieces(m: int, k: int) -> list[_Piece]:
    key = (m, k)
    if key not in _PIECES:
        _PIECES[key] = [_prepare(r) for r in _class_rows(m, k)]
    return _PIECES[key]


def glue_at(h: Rows, w: int, b: Rows, x: int) -> Rows:
    """Identify vertex ``x`` of ``b`` with vertex ``w`` of ``h``.

    ``h`` keeps its labels; the other vertices of ``b`` follow in order.
    """
    m = len(h)
    rows = list(h) + [0] * (len(b) - 1)
    label = []
    nxt = m
    for u in range(len(b)):
        if u == x:
            label.append(w)
        else:
            label.append(nxt)
            nxt += 1
    for u in range(len(b)):
        r = 0
        bits = b[u]
        while bits:
            low = bits & -bits
            r |= 1 << label[low.bit_length() - 1]
            bits ^= low
        rows[label[u]] |= r
    return tuple(rows)


def _glue_batch(job: tuple[int, int, list[tuple[Rows, int, tuple[int, ...], tuple[int, ...]]], list[tuple[Rows, tuple[int, ...]]]]) -> set[bytes]:
    k, b, hosts, blocks = job
    out: set[bytes] = set()
    for h_rows, h_cuts, h_reps, h_mins in hosts:
        hk = h_cuts.bit_count()
        for w in h_reps:
            w_cut = bool(h_cuts >> w & 1)
            if hk + (not w_cut) != k:
                continue
            if b > h_mins[w]:
                continue
            for b_rows, b_reps in blocks:
                for x in b_reps:
                    out.add(certificate_bytes(canonical_rows(glue_at(h_rows, w, b_rows, x))))
    return out


def _class_certs(n: int, k: int, partitions: int = 1, workers: int = 1) -> list[bytes]:
    key = (n, k)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    if k == 0:
        certs = sorted(certificate_bytes(r) for r in connected_rows(n, partitions, workers) if not cut_vertex_mask(r))
    else:
        found: set[bytes] = set()
        for b in range(2, n):
            m = n - b + 1
            blocks = [(p.rows, p.reps) for p in _pieces(b, 0)]
            hosts = []
            for hk in (k - 1, k):
                if 0 <= hk <= max(m - 2, 0):
                    hosts += [(p.rows, p.cuts, p.reps, p.min_pendant_without) for p in _pieces(m, hk)]
            if not hosts or not blocks:
                continue
            jobs = [(k, b, [hosts[i] for i in grp], blocks) for grp in _split(hosts, partitions) if grp]
            if workers > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(_glue_batch, jobs))
            else:
                results = [_glue_batch(j) for j in jobs]
            for r in results:
                found |= r
            log.info("C(%d,%d): %d classes after pendant blocks of order %d", n, k, len(found), b)
        certs = sorted(found)
    if n <= GENERATION_CAP - 1:
        _CLASS_CACHE[key] = certs
    return certs


def _rows_of(cert: bytes) -> Rows:
    n = cert[0]
    width = (n + 7) // 8
    return tuple(int.from_bytes(cert[1 + i * width:1 + (i + 1) * width], "big") for i in range(n))


def _class_rows(n: int, k: int) -> list[Rows]:
    return [_rows_of(c) for c in _class_certs(n, k)]


def check_class_args(n: int, k: int) -> None:
    if n < 1:
        raise EnumerationError("n >= 1 required")
    hi = max(n - 2, 0)
    if not 0 <= k <= hi:
        raise EnumerationError(f"C({n},{k}) is empty: need 0 <= k <= {hi}")


def generate_class(n: int, k: int, partitions: int = 1, workers: int = 1, max_n: int = GENERATION_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with ``k`` cut vertices."""
    check_class_args(n, k)
    _check_cap(n, max_n)
    for cert in _class_certs(n, k, partitions, workers):
        yield Graph.trusted(_rows_of(cert))


def class_size(n: int, k: int) -> int:
    check_class_args(n, k)
    return len(_class_certs(n, k))


# -- graph6 ingestion --------------------------------------------------------------


def ingest_graph6(
    source: TextIO | Iterable[str],
    config: EnumerationConfig | None = None,
    strict: bool = True,
    errors: list[Graph6Error] | None = None,
) -> Iterator[Graph]:
    """Decode graph6 lines, keeping those ``config`` accepts, in input order.

    Non-strict mode logs malformed lines (and appends them to ``errors``)
    instead of raising.
    """
    for _, item in read_lines(source, strict=strict):
        if isinstance(item, Graph6Error):
            log.warning("%s", item)
            if errors is not None:
                errors.append(item)
            continue
        if config is None or config.accepts(item):
            yield item
