"""Machine checks of the extremal statements about C(n, k).

Each check produces one or more :class:`CheckReport` rows.  Evidence comes at
three levels and every row names its level:

* ``exhaustive``: every isomorphism class in scope was examined;
* ``formula``: exact integer comparison of closed forms, or BFS on explicitly
  built family members;
* ``randomized``: seeded random instances (graph rewiring arguments that
  quantify over attachment choices rather than over a class).

A failing row always carries a counterexample in graph6 together with the
values that broke the statement.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Iterator

from . import families as fam
from .canon import canonical_certificate, graph_from_certificate
from .enumeration import (
    GENERATION_CAP,
    EnumerationError,
    check_class_args,
    connected_rows,
    glue_at,
)
from .graph import (
    Graph,
    _distance_sum,
    bfs_layers,
    component_mask,
    has_triangle,
    iter_bits,
    vertex_distances,
    wiener_index,
)
from .graph6 import encode
from .search import (
    DISTANCE,
    WIENER,
    ExtremalRecord,
    search_max_vertex_distance,
    search_max_wiener,
)
from .structure import (
    S_PENDANT,
    BlockCutDecomposition,
    _block_masks,
    cut_vertex_mask,
    decompose,
    is_minimally_two_connected,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

EXHAUSTIVE = "exhaustive"
FORMULA = "formula"
RANDOMIZED = "randomized"

CSV_COLUMNS = ("check_id", "status", "n", "k", "optimum", "witness_count", "elapsed_ms")

Rows = tuple[int, ...]


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    values: str


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    status: str
    evidence: str
    scope: str
    n: int | None = None
    k: int | None = None
    optimum: int | None = None
    witness_count: int | None = None
    detail: str = ""
    counterexample: Counterexample | None = None
    witnesses: tuple[str, ...] = ()
    elapsed_ms: float = 0.0

    def __post_init__(self) -> None:
        if self.status == FAIL and self.counterexample is None:
            raise ValueError(f"{self.check_id}: a failing report needs a counterexample")


@dataclass(frozen=True)
class Scope:
    """Parameter ranges for :func:`check_suite`."""

    structural_max_n: int = 8
    search_max_n: int = 9
    formula_max_n: int = 80
    oracle_max_n: int = 60
    samples: int = 1000
    seed: int = 0
    workers: int = 1
    partitions: int = 1

    def __post_init__(self) -> None:
        if self.search_max_n > GENERATION_CAP:
            raise EnumerationError(f"exhaustive searches are capped at n = {GENERATION_CAP}")
        if min(self.structural_max_n, self.search_max_n) < 4:
            raise ValueError("scopes below n = 4 exercise nothing")


# -- small helpers --------------------------------------------------------------------


class _Tally:
    """Counts cases and keeps the first violation."""

    def __init__(self) -> None:
        self.cases = 0
        self.bad: Counterexample | None = None

    def record(self, ok: bool, g: Graph | Rows | Callable[[], Graph], values: Callable[[], str]) -> None:
        """``g`` may be a factory so that expensive builds happen only on failure."""
        self.cases += 1
        if not ok and self.bad is None:
            if callable(g):
                g = g()
            graph = g if isinstance(g, Graph) else Graph.trusted(g)
            self.bad = Counterexample(encode(graph), values())

    def report(self, check_id: str, evidence: str, scope: str, **kw) -> CheckReport:
        status = PASS if self.bad is None else FAIL
        detail = kw.pop("detail", f"{self.cases} cases")
        return CheckReport(check_id, status, evidence, scope, detail=detail, counterexample=self.bad, **kw)


def _dist_list(rows: Rows, src: int) -> list[int]:
    out = [0] * len(rows)
    for d, layer in enumerate(bfs_layers(rows, src)):
        for v in iter_bits(layer):
            out[v] = d
    return out


def _distance_sums(rows: Rows) -> list[int]:
    return [_distance_sum(rows, v)[0] for v in range(len(rows))]


def _induced(rows: Rows, mask: int) -> tuple[Rows, list[int]]:
    """Induced subgraph on ``mask``; also returns the original label of each new vertex."""
    keep = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    sub = []
    for v in keep:
        r = 0
        for u in iter_bits(rows[v] & mask):
            r |= 1 << pos[u]
        sub.append(r)
    return tuple(sub), keep


def _cert(g: Graph) -> bytes:
    return canonical_certificate(g)


def _g6(cert: bytes) -> str:
    return encode(graph_from_certificate(cert))


def _is_cycle_block(rows: Rows, block: tuple[int, ...]) -> bool:
    mask = sum(1 << v for v in block)
    return len(block) >= 3 and all((rows[v] & mask).bit_count() == 2 for v in block)


def _pendant_blocks_normal(g: Graph, dec: BlockCutDecomposition) -> bool:
    """Every pendant block is an edge or a cycle on at least four vertices."""
    for b in dec.pendant_blocks:
        blk = dec.blocks[b]
        if len(blk) == 2:
            continue
        if len(blk) < 4 or not _is_cycle_block(g.rows, blk):
            return False
    return True


def _all_connected(n_max: int, n_min: int = 2) -> Iterator[Rows]:
    for n in range(n_min, n_max + 1):
        yield from connected_rows(n)


# -- cached searches ------------------------------------------------------------------

_RECORDS: dict[tuple[int, int, str], ExtremalRecord] = {}


def _record(n: int, k: int, objective: str, scope: Scope) -> ExtremalRecord:
    key = (n, k, objective)
    if key not in _RECORDS:
        fn = search_max_wiener if objective == WIENER else search_max_vertex_distance
        _RECORDS[key] = fn(n, k, partitions=scope.partitions, workers=scope.workers, max_n=scope.search_max_n)
    return _RECORDS[key]


# -- surgery --------------------------------------------------------------------------


def surgery_pendant_block_to_cycle(g: Graph, b: int, decomposition: BlockCutDecomposition | None = None) -> Graph:
    """Replace pendant block ``b`` by a cycle through the same vertices.

    The cycle visits the block's cut vertex first and the other block vertices
    in increasing order, so the cut vertex keeps its role.  A block that is
    already a cycle is returned unchanged.
    """
    dec = decomposition or decompose(g)
    if not 0 <= b < len(dec.blocks):
        raise ValueError(f"block index {b} out of range (graph has {len(dec.blocks)} blocks)")
    if not dec.is_pendant(b):
        raise ValueError(f"block {b} is not a pendant block")
    blk = dec.blocks[b]
    if len(blk) < 4:
        raise ValueError(f"block {b} has {len(blk)} vertices; the surgery needs at least 4")
    if _is_cycle_block(g.rows, blk):
        return g
    (w,) = dec.cut_vertices_of(b)
    order = [w] + [v for v in blk if v != w]
    mask = sum(1 << v for v in blk)
    rows = [r & ~mask if (1 << v) & mask else r for v, r in enumerate(g.rows)]
    for i, v in enumerate(order):
        u = order[(i + 1) % len(order)]
        rows[v] |= 1 << u
        rows[u] |= 1 << v
    return Graph(g.n, tuple(rows))


# -- structural checks (exhaustive over all connected graphs) -----------------------


def _check_edge_deletion(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for rows in _all_connected(scope.structural_max_n):
        n = len(rows)
        full = (1 << n) - 1
        base_d = _distance_sums(rows)
        base_w = sum(base_d) // 2
        for u in range(n):
            for v in iter_bits(rows[u] >> (u + 1) << (u + 1)):
                cut = list(rows)
                cut[u] ^= 1 << v
                cut[v] ^= 1 << u
                cut_t = tuple(cut)
                if component_mask(cut_t, 0) != full:
                    continue
                d = _distance_sums(cut_t)
                w = sum(d) // 2
                ok = w > base_w and all(a >= b for a, b in zip(d, base_d))
                tally.record(ok, rows, lambda: f"edge {u}-{v}: W {base_w} -> {w}")
    return [tally.report("edge-deletion", EXHAUSTIVE, f"connected graphs, n <= {scope.structural_max_n}, every non-bridge edge")]


def _check_cut_vertex_split(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for rows in _all_connected(scope.structural_max_n, 3):
        n = len(rows)
        full = (1 << n) - 1
        cuts = cut_vertex_mask(rows)
        if not cuts:
            continue
        d_all = _distance_sums(rows)
        w_all = sum(d_all) // 2
        for w in iter_bits(cuts):
            dist_w = _dist_list(rows, w)
            rest = full ^ (1 << w)
            while rest:
                start = (rest & -rest).bit_length() - 1
                comp = component_mask(rows, start, rest)
                rest &= ~comp
                m1 = comp | (1 << w)
                m2 = full & ~comp
                g1, lab1 = _induced(rows, m1)
                g2, lab2 = _induced(rows, m2)
                d1 = _distance_sums(g1)
                d2 = _distance_sums(g2)
                w_in_2 = lab2.index(w)
                n1, n2 = len(g1), len(g2)
                ok = True
                for i, v in enumerate(lab1):
                    if d_all[v] != d1[i] + (n2 - 1) * dist_w[v] + d2[w_in_2]:
                        ok = False
                w_in_1 = lab1.index(w)
                split = sum(d1) // 2 + sum(d2) // 2 + (n1 - 1) * d2[w_in_2] + (n2 - 1) * d1[w_in_1]
                ok = ok and split == w_all
                tally.record(ok, rows, lambda: f"cut vertex {w}: W {w_all}, split identity gives {split}")
    return [tally.report("cut-vertex-split", EXHAUSTIVE, f"every cut vertex and side, n <= {scope.structural_max_n}")]


def _check_min2conn_triangle_free(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for rows in _all_connected(scope.structural_max_n, 4):
        if cut_vertex_mask(rows):
            continue
        g = Graph.trusted(rows)
        if is_minimally_two_connected(g):
            tally.record(not has_triangle(g), g, lambda: "minimally 2-connected with a triangle")
    return [tally.report("min2conn-triangle-free", EXHAUSTIVE, f"minimally 2-connected graphs, 4 <= n <= {scope.structural_max_n}")]


def _check_two_s_pendant_blocks(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for rows in _all_connected(scope.structural_max_n, 4):
        if cut_vertex_mask(rows).bit_count() < 2:
            continue
        dec = decompose(Graph.trusted(rows))
        count = dec.kinds.count(S_PENDANT)
        tally.record(count >= 2, rows, lambda: f"k = {dec.k}, s-pendant blocks = {count}")
    return [tally.report("two-s-pendant-blocks", EXHAUSTIVE, f"connected graphs with k >= 2, n <= {scope.structural_max_n}")]


def _check_far_blocks_pendant(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for rows in _all_connected(scope.structural_max_n, 3):
        masks = _block_masks(rows)
        if len(masks) < 2:
            continue
        cuts = cut_vertex_mask(rows)
        dist = [_dist_list(rows, v) for v in range(len(rows))]
        verts = [list(iter_bits(m)) for m in masks]
        pendant = [(m & cuts).bit_count() == 1 for m in masks]
        best = -1
        pairs: list[tuple[int, int]] = []
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                d = min(dist[a][b] for a in verts[i] for b in verts[j])
                if d > best:
                    best, pairs = d, [(i, j)]
                elif d == best:
                    pairs.append((i, j))
        ok = all(pendant[i] and pendant[j] for i, j in pairs)
        tally.record(ok, rows, lambda: f"farthest block pair at distance {best} includes a non-pendant block")
    return [tally.report("far-blocks-pendant", EXHAUSTIVE, f"graphs with >= 2 blocks, n <= {scope.structural_max_n}")]


# -- closed-form family comparisons -----------------------------------------------------


def _family_graph(spec: fam.FamilySpec) -> Callable[[], Graph]:
    # members past 64 vertices cannot be encoded; a single vertex stands in
    return lambda: fam.build(spec) if spec.order <= 64 else Graph.empty(1)


def dumbbell_max_vertex_distance(m1: int, m2: int, n: int) -> int:
    """Largest vertex distance in ``C(m1, m2, n)``, exactly.

    A vertex of the first cycle at distance ``d`` from its attachment vertex
    ``w`` has distance sum ``D_{C_m1}`` + ``(n - m1) d`` + ``D_rest(w)``, which
    grows with ``d``; symmetrically for the second cycle.  Along the joining
    path the distance sum is convex, so its maximum sits at an end, which is
    a cycle vertex.
    """
    k = n + 2 - m1 - m2

    def far_side(a: int, b: int) -> int:
        rest = fam.formula_cycle_vertex_distance(b) if k == 1 else fam.formula_lollipop_pendant_distance(b + k - 1, b)
        return fam.formula_cycle_vertex_distance(a) + (n - a) * (a // 2) + rest

    return max(far_side(m1, m2), far_side(m2, m1))


def _check_cycle_beats_shared_dumbbell(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for m1 in range(3, top):
        for m2 in range(m1, top + 2 - m1):
            n = m1 + m2 - 1
            wc, wd = fam.formula_wiener_cycle(n), fam.formula_wiener_dumbbell(m1, m2, n)
            tally.record(wc > wd, _family_graph(fam.dumbbell(m1, m2, n)),
                         lambda: f"m1={m1} m2={m2}: W(C_n)={wc}, W(dumbbell)={wd}")
    return [tally.report("cycle-beats-shared-dumbbell", FORMULA, f"m1, m2 >= 3, n = m1 + m2 - 1 <= {top}")]


def _check_lollipop_beats_dumbbell_distance(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for n in range(5, top + 1):
        for m1 in range(3, n):
            for m2 in range(m1, n):
                k = n + 2 - m1 - m2
                if k < 1:
                    break
                lp = fam.formula_lollipop_pendant_distance(n, n - k)
                dm = dumbbell_max_vertex_distance(m1, m2, n)
                tally.record(lp > dm, _family_graph(fam.dumbbell(m1, m2, n)),
                             lambda: f"n={n} k={k}: D(lollipop pendant)={lp}, max D(dumbbell)={dm}")
    return [tally.report("lollipop-beats-dumbbell-distance", FORMULA, f"m1, m2 >= 3, k >= 1, n <= {top}")]


def _check_one_cut_family(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for m1 in range(4, top):
        for m2 in range(m1, top + 2 - m1):
            n = m1 + m2 - 1
            wc = fam.formula_wiener_cycle(n)
            wl = fam.formula_wiener_lollipop(n, n - 1)
            wd = fam.formula_wiener_dumbbell(m1, m2, n)
            tally.record(wc >= wl > wd, _family_graph(fam.dumbbell(m1, m2, n)),
                         lambda: f"m1={m1} m2={m2}: W(C_n)={wc}, W(L_n,n-1)={wl}, W(dumbbell)={wd}")
    return [tally.report("one-cut-family-comparison", FORMULA, f"m1, m2 >= 4, n = m1 + m2 - 1 <= {top}")]


def _check_two_cut_family(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for m1 in range(4, top):
        for m2 in range(m1, top + 1 - m1):
            n = m1 + m2
            wl = fam.formula_wiener_lollipop(n, n - 2)
            wd = fam.formula_wiener_dumbbell(m1, m2, n)
            ok = wd == wl if (m1, m2) == (4, 4) else wd < wl
            tally.record(ok, _family_graph(fam.dumbbell(m1, m2, n)),
                         lambda: f"m1={m1} m2={m2}: W(dumbbell)={wd}, W(L_n,n-2)={wl}")
    return [tally.report("two-cut-family-comparison", FORMULA,
                         f"m1, m2 >= 4, n = m1 + m2 <= {top}; equality exactly at m1 = m2 = 4")]


def _check_three_cut_family(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for m1 in range(4, top):
        for m2 in range(m1, top - m1):
            n = m1 + m2 + 1
            if n < 14:
                continue
            wl = fam.formula_wiener_lollipop(n, n - 3)
            wd = fam.formula_wiener_dumbbell(m1, m2, n)
            tally.record(wd < wl, _family_graph(fam.dumbbell(m1, m2, n)),
                         lambda: f"m1={m1} m2={m2}: W(dumbbell)={wd}, W(L_n,n-3)={wl}")
    return [tally.report("three-cut-family-comparison", FORMULA, f"m1, m2 >= 4, 14 <= n = m1 + m2 + 1 <= {top}")]


def _check_lollipop_pendant_dominates(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = min(scope.oracle_max_n, 30)
    for n in range(4, top + 1):
        for k in range(1, n - 2):
            g = fam.build(fam.lollipop(n, n - k))
            d = vertex_distances(g)
            z = n - 1
            ok = all(d[z] > d[v] for v in range(n) if v != z)
            tally.record(ok, g, lambda: f"L_{n},{n - k}: pendant {d[z]}, others up to {max(d[:z])}")
    return [tally.report("lollipop-pendant-dominates", FORMULA, f"L_(n,n-k), 4 <= n <= {top}, 1 <= k <= n-3 (BFS)")]


# -- randomized rewiring checks -------------------------------------------------------


def _check_surgery(scope: Scope) -> list[CheckReport]:
    rng = random.Random(scope.seed)
    tally = _Tally()
    top = scope.structural_max_n
    pools = {n: connected_rows(n) for n in range(5, top + 1)}
    while tally.cases < scope.samples:
        n = rng.randint(5, top)
        rows = rng.choice(pools[n])
        g = Graph.trusted(rows)
        cuts = cut_vertex_mask(rows)
        if not cuts:
            continue
        dec = decompose(g)
        big = [b for b in dec.pendant_blocks if len(dec.blocks[b]) >= 4]
        if not big:
            continue
        b = rng.choice(big)
        blk = dec.blocks[b]
        (w,) = dec.cut_vertices_of(b)
        h = surgery_pendant_block_to_cycle(g, b, dec)
        before, after = vertex_distances(g), vertex_distances(h)
        outside = [v for v in range(n) if v not in blk or v == w]
        ok = (
            cut_vertex_mask(h.rows) == cuts
            and all(after[v] >= before[v] for v in outside)
            and max(after[v] for v in blk) >= max(before[v] for v in blk)
        )
        tally.record(ok, g, lambda: f"block {blk}: D before {before}, after {after}")
    return [tally.report("pendant-block-cycle-surgery", RANDOMIZED,
                         f"{scope.samples} random pendant blocks of order >= 4, 5 <= n <= {top}, seed {scope.seed}")]


def _check_cycle_replacement(scope: Scope) -> list[CheckReport]:
    rng = random.Random(scope.seed)
    tally = _Tally()
    pools = {h: connected_rows(h) for h in range(2, 7)}
    for _ in range(scope.samples):
        h_rows = rng.choice(pools[rng.randint(2, 6)])
        w = rng.randrange(len(h_rows))
        m1, m2 = rng.randint(3, 6), rng.randint(3, 6)
        m = m1 + m2 - 1
        # vertex 0 is the shared cut vertex in each of these builds
        g = glue_at(h_rows, w, fam.build(fam.cycle(m)).rows, 0)
        g1 = glue_at(h_rows, w, fam.build(fam.dumbbell(m1, m2, m)).rows, 0)
        g2 = glue_at(h_rows, w, fam.build(fam.lollipop(m, m - 1)).rows, 0)
        ok = True
        for v in range(len(h_rows)):
            d, d1, d2 = (_distance_sum(x, v)[0] for x in (g, g1, g2))
            ok = ok and d > d1 and d > d2
        tally.record(ok, g1, lambda: f"host order {len(h_rows)}, w={w}, m1={m1}, m2={m2}")
    return [tally.report("cycle-replacement-comparison", RANDOMIZED,
                         f"{scope.samples} random hosts (order 2..6), 3 <= m1, m2 <= 6, seed {scope.seed}")]


# -- exhaustive extremal searches -------------------------------------------------------


def _witness_rows(rec: ExtremalRecord) -> list[tuple[bytes, Graph]]:
    return [(c, graph_from_certificate(c)) for c in rec.witnesses]


def _timed(fn: Callable[[], CheckReport]) -> CheckReport:
    start = time.perf_counter()
    rep = fn()
    return replace(rep, elapsed_ms=(time.perf_counter() - start) * 1000)


def _search_report(
    check_id: str, rec: ExtremalRecord, expected_opt: int | None, expected: set[bytes] | None,
    scope: str, must_contain: set[bytes] | None = None, evidence: str = EXHAUSTIVE,
) -> CheckReport:
    found = set(rec.witnesses)
    problems = []
    bad: Counterexample | None = None
    if expected_opt is not None and rec.optimum != expected_opt:
        problems.append(f"optimum {rec.optimum} != {expected_opt}")
        bad = Counterexample(_g6(rec.witnesses[0]), f"W or D = {rec.optimum}, expected {expected_opt}")
    if expected is not None and found != expected:
        extra = sorted(found - expected)
        missing = sorted(expected - found)
        problems.append(f"{len(extra)} unexpected and {len(missing)} missing witnesses")
        if bad is None:
            c = (extra or missing)[0]
            g = graph_from_certificate(c)
            score = wiener_index(g) if rec.objective == WIENER else max(vertex_distances(g))
            role = "unexpected witness" if extra else "expected witness missing"
            bad = Counterexample(encode(g), f"{role}, value {score}")
    if must_contain is not None and not must_contain <= found:
        problems.append("reference graph is not extremal")
        if bad is None:
            c = sorted(must_contain - found)[0]
            bad = Counterexample(_g6(c), f"reference value below optimum {rec.optimum}")
    rescored = rec.rescore()
    if any(s != rec.optimum for s in rescored) and bad is None:
        problems.append("witness re-scoring disagrees")
        bad = Counterexample(_g6(rec.witnesses[0]), f"rescored {rescored}")
    return CheckReport(
        check_id, FAIL if problems else PASS, evidence, scope, n=rec.n, k=rec.k, optimum=rec.optimum,
        witness_count=len(rec.witnesses), detail="; ".join(problems) or f"class size {rec.class_size}",
        counterexample=bad, witnesses=tuple(_g6(c) for c in rec.witnesses),
    )


def _k0_top(scope: Scope) -> int:
    # C(10, 0) holds ~10^7 classes; the 2-connected searches stop at 9
    return min(scope.search_max_n, 9)


def _sweep_top(scope: Scope) -> int:
    # sweeps over every k stay at n <= 9; --max-n 10 only widens the named n = 10 rows
    return min(scope.search_max_n, 9)


def _check_cycle_vertex_distance(scope: Scope) -> list[CheckReport]:
    out = []
    for n in range(3, _k0_top(scope) + 1):
        rec = _record(n, 0, DISTANCE, scope)
        out.append(_search_report("cycle-vertex-distance-max", rec, fam.formula_cycle_vertex_distance(n), None,
                                  "max D over C(n,0)", must_contain={_cert(fam.build(fam.cycle(n)))}))
    return out


def _check_max_vertex_distance(scope: Scope) -> list[CheckReport]:
    out = []
    for n in range(4, _sweep_top(scope) + 1):
        for k in range(1, n - 2):
            rec = _record(n, k, DISTANCE, scope)
            ref = _cert(fam.build(fam.lollipop(n, n - k)))
            out.append(_search_report("max-vertex-distance", rec, fam.formula_lollipop_pendant_distance(n, n - k),
                                      None, "max D over C(n,k)", must_contain={ref}))
    return out


def _distance_targets(scope: Scope) -> Iterator[tuple[int, int]]:
    for n in range(4, _sweep_top(scope) + 1):
        for k in range(1, n - 1):
            yield n, k


def _check_distance_normal_form(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for n, k in _distance_targets(scope):
        rec = _record(n, k, DISTANCE, scope)
        ws = [g for _, g in _witness_rows(rec)]
        ok = any(not has_triangle(g) and _pendant_blocks_normal(g, decompose(g)) for g in ws)
        tally.record(ok, ws[0], lambda: f"C({n},{k}): no triangle-free witness with edge/cycle pendant blocks")
    return [tally.report("distance-max-normal-form", EXHAUSTIVE, f"4 <= n <= {_sweep_top(scope)}, k >= 1",
                         detail=f"{tally.cases} classes")]


def _check_peripherian_location(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for n, k in _distance_targets(scope):
        rec = _record(n, k, DISTANCE, scope)
        for _, g in _witness_rows(rec):
            dec = decompose(g)
            d = vertex_distances(g)
            for v in (v for v in range(n) if d[v] == rec.optimum):
                homes = [b for b in dec.blocks_at(v) if dec.is_pendant(b)]
                ok = bool(homes)
                if ok and n >= 5:
                    ok = any(len(dec.blocks_at(dec.cut_vertices_of(b)[0])) == 2 for b in homes)
                tally.record(ok, g, lambda: f"C({n},{k}): vertex {v} with D = {d[v]} outside a suitable pendant block")
    return [tally.report("peripherian-in-pendant-block", EXHAUSTIVE,
                         f"every peripherian of every D-maximal graph, 4 <= n <= {_sweep_top(scope)}, k >= 1")]


def _check_cycle_max_wiener(scope: Scope) -> list[CheckReport]:
    out = []
    for n in range(3, _k0_top(scope) + 1):
        rec = _record(n, 0, WIENER, scope)
        ref = {_cert(fam.build(fam.cycle(n)))}
        out.append(_search_report("cycle-max-wiener", rec, fam.formula_wiener_cycle(n), ref, "max W over C(n,0), unique C_n"))
    return out


def _wiener_targets(scope: Scope, n_min: int) -> Iterator[tuple[int, int]]:
    for n in range(n_min, _sweep_top(scope) + 1):
        for k in range(1, n - 1):
            yield n, k


def _check_wiener_pendant_blocks(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for n, k in _wiener_targets(scope, 4):
        rec = _record(n, k, WIENER, scope)
        for _, g in _witness_rows(rec):
            tally.record(_pendant_blocks_normal(g, decompose(g)), g,
                         lambda: f"C({n},{k}): W-maximal graph with a pendant block that is neither an edge nor a cycle >= 4")
    return [tally.report("wiener-max-pendant-blocks", EXHAUSTIVE, f"every W-maximal graph, 4 <= n <= {_sweep_top(scope)}, k >= 1")]


def _check_pendant_sharing(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    for n, k in _wiener_targets(scope, 7):
        rec = _record(n, k, WIENER, scope)
        for _, g in _witness_rows(rec):
            dec = decompose(g)
            ok = True
            for w in dec.cut_vertices:
                pend = [b for b in dec.blocks_at(w) if dec.is_pendant(b)]
                if len(pend) > 2:
                    ok = False
                if k >= 2 and len(pend) == 2 and any(len(dec.blocks[b]) != 2 for b in pend):
                    ok = False
            tally.record(ok, g, lambda: f"C({n},{k}): cut vertex shared by too many or non-edge pendant blocks")
    return [tally.report("pendant-sharing", EXHAUSTIVE, f"every W-maximal graph, 7 <= n <= {_sweep_top(scope)}, k >= 1")]


def _unique_lollipop_rows(check_id: str, k: int, ns: Iterable[int], scope: Scope) -> list[CheckReport]:
    out = []
    for n in ns:
        rec = _record(n, k, WIENER, scope)
        ref = {_cert(fam.build(fam.lollipop(n, n - k)))}
        out.append(_search_report(check_id, rec, fam.formula_wiener_Lnk_special(n, k), ref,
                                  f"max W over C(n,{k}), unique L_(n,n-{k})"))
    return out


def _check_one_cut_max(scope: Scope) -> list[CheckReport]:
    return _unique_lollipop_rows("one-cut-max-wiener", 1, range(7, scope.search_max_n + 1), scope)


def _check_two_cut_max(scope: Scope) -> list[CheckReport]:
    if scope.search_max_n < 10:
        return [CheckReport("two-cut-max-wiener", SKIPPED, EXHAUSTIVE, "max W over C(n,2), n >= 10", n=10, k=2,
                            detail=f"needs n >= 10; exhaustive cap is {scope.search_max_n} (raise with --max-n 10)")]
    return _unique_lollipop_rows("two-cut-max-wiener", 2, range(10, scope.search_max_n + 1), scope)


def _check_two_cut_families(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for n in range(10, top + 1):
        wl = fam.formula_wiener_Lnk_special(n, 2)
        wf = fam.formula_wiener_forked_any(n, n - 3)
        tally.record(wf < wl, _family_graph(fam.forked(n, n - 3)), lambda: f"n={n}: W(F_n,n-3)={wf}, W(L_n,n-2)={wl}")
        for m1 in range(4, n // 2 + 1):
            wd = fam.formula_wiener_dumbbell(m1, n - m1, n)
            tally.record(wd < wl, _family_graph(fam.dumbbell(m1, n - m1, n)),
                         lambda: f"n={n}: W(dumbbell {m1},{n - m1})={wd}, W(L_n,n-2)={wl}")
    return [tally.report("two-cut-max-wiener-families", FORMULA, f"10 <= n <= {top}: F(n,n-3) and dumbbells below L(n,n-2)")]


def _check_three_cut_max(scope: Scope) -> list[CheckReport]:
    return [CheckReport("three-cut-max-wiener", SKIPPED, EXHAUSTIVE, "max W over C(n,3), n >= 14", n=14, k=3,
                        detail=f"needs n >= 14; exhaustive generation stops at n = {GENERATION_CAP}")]


def _check_three_cut_families(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    top = scope.formula_max_n
    for n in range(14, top + 1):
        wl = fam.formula_wiener_Lnk_special(n, 3)
        wf = fam.formula_wiener_forked(n)
        tally.record(wf < wl, _family_graph(fam.forked(n, n - 4)), lambda: f"n={n}: W(F_n,n-4)={wf}, W(L_n,n-3)={wl}")
        for m1 in range(4, (n - 1) // 2 + 1):
            wd = fam.formula_wiener_dumbbell(m1, n - 1 - m1, n)
            tally.record(wd < wl, _family_graph(fam.dumbbell(m1, n - 1 - m1, n)),
                         lambda: f"n={n}: W(dumbbell {m1},{n - 1 - m1})={wd}, W(L_n,n-3)={wl}")
    return [tally.report("three-cut-max-wiener-families", FORMULA, f"14 <= n <= {top}: F(n,n-4) and dumbbells below L(n,n-3)")]


# -- closed forms against BFS -------------------------------------------------------------


def formula_oracle_cases(max_n: int = 60) -> Iterator[tuple[str, tuple[int, ...], fam.FamilySpec, Callable[[Graph], int], int]]:
    """``(closed form, its arguments, family member, BFS measurement, closed-form value)`` tuples."""
    for n in range(1, max_n + 1):
        p = fam.path(n)
        yield "path-wiener", (n,), p, wiener_index, fam.formula_wiener_path(n)
        for i in range(1, n + 1):
            yield ("path-vertex-distance", (n, i), p, (lambda g, i=i: _distance_sum(g.rows, i - 1)[0]),
                   fam.formula_path_vertex_distance(n, i))
    for n in range(3, max_n + 1):
        c = fam.cycle(n)
        yield "cycle-vertex-distance", (n,), c, (lambda g: _distance_sum(g.rows, 0)[0]), fam.formula_cycle_vertex_distance(n)
        yield "cycle-wiener", (n,), c, wiener_index, fam.formula_wiener_cycle(n)
        for g in range(3, n + 1):
            lol = fam.lollipop(n, g)
            yield "lollipop-wiener", (n, g), lol, wiener_index, fam.formula_wiener_lollipop(n, g)
            if g < n:
                yield ("lollipop-pendant-distance", (n, g), lol, (lambda x: _distance_sum(x.rows, x.n - 1)[0]),
                       fam.formula_lollipop_pendant_distance(n, g))
        for k in (1, 2, 3):
            if n >= k + 3:
                yield "lollipop-wiener-special", (n, k), fam.lollipop(n, n - k), wiener_index, fam.formula_wiener_Lnk_special(n, k)
        if n >= 7:
            yield "forked-wiener", (n,), fam.forked(n, n - 4), wiener_index, fam.formula_wiener_forked(n)
    for m1 in range(3, max_n):
        for m2 in range(m1, max_n):
            for n in range(m1 + m2 - 1, max_n + 1):
                # dense below 31 vertices, a sparse grid above
                if n > 30 and (m1 % 4 or m2 % 3 or (n - m1 - m2) % 5):
                    continue
                yield ("dumbbell-wiener", (m1, m2, n), fam.dumbbell(m1, m2, n), wiener_index,
                       fam.formula_wiener_dumbbell(m1, m2, n))


def _check_formula_oracle(scope: Scope) -> list[CheckReport]:
    tally = _Tally()
    built: dict[fam.FamilySpec, Graph] = {}
    names: set[str] = set()
    for name, args, spec, measure, value in formula_oracle_cases(scope.oracle_max_n):
        g = built.get(spec)
        if g is None:
            g = built[spec] = fam.build(spec)
        got = measure(g)
        names.add(name)
        tally.record(got == value, g, lambda: f"{name}{args}: BFS {got}, formula {value}")
    detail = f"{tally.cases} parameter tuples over {len(names)} closed forms"
    return [tally.report("formula-oracle", FORMULA, f"family members up to n = {scope.oracle_max_n}, BFS vs closed form", detail=detail)]


# -- tables -----------------------------------------------------------------------------------


def _edges(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def _c4_two_leaves() -> Graph:
    return _edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)])


@dataclass(frozen=True)
class TableRow:
    table: int
    n: int
    k: int
    optimum: int
    witnesses: tuple[Graph, ...]
    exhaustive: bool = True


def table_rows() -> list[TableRow]:
    L, C, F, S = fam.lollipop, fam.dumbbell, fam.forked, fam.star
    b = fam.build
    return [
        TableRow(1, 4, 1, 9, (b(S(4)),)),
        TableRow(1, 5, 1, 16, (b(L(5, 4)), b(S(5)))),
        TableRow(1, 6, 1, 26, (b(L(6, 5)), _c4_two_leaves())),
        TableRow(2, 5, 2, 18, (_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]),)),
        TableRow(2, 6, 2, 29, (b(L(6, 4)), _edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]))),
        TableRow(2, 7, 2, 44, (b(F(7, 4)),)),
        TableRow(2, 8, 2, 64, (b(C(4, 4, 8)), b(L(8, 6)))),
        TableRow(2, 9, 2, 88, (b(L(9, 7)), b(F(9, 6)))),
        TableRow(3, 6, 3, 32, (_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]),)),
        TableRow(3, 7, 3, 48, (b(L(7, 4)), _edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]))),
        TableRow(3, 8, 3, 69, (b(F(8, 4)),)),
        TableRow(3, 9, 3, 96, (b(C(4, 4, 9)),)),
        TableRow(3, 10, 3, 126, (b(C(4, 5, 10)), b(F(10, 6)))),
        TableRow(3, 11, 3, 166, (b(C(4, 6, 11)),), exhaustive=False),
        TableRow(3, 12, 3, 209, (b(C(4, 7, 12)), b(F(12, 8))), exhaustive=False),
        TableRow(3, 13, 3, 264, (b(C(6, 6, 13)), b(L(13, 10))), exhaustive=False),
    ]


def _check_table(table: int, scope: Scope) -> list[CheckReport]:
    out = []
    check_id = f"table-{table}"
    for row in (r for r in table_rows() if r.table == table):
        if row.exhaustive:
            if row.n > scope.search_max_n:
                out.append(CheckReport(check_id, SKIPPED, EXHAUSTIVE, "max W over C(n,k)", n=row.n, k=row.k,
                                       detail=f"n = {row.n} exceeds the exhaustive cap {scope.search_max_n} (use --max-n {row.n})"))
                continue
            rec = _record(row.n, row.k, WIENER, scope)
            expected = {_cert(g) for g in row.witnesses}
            out.append(_search_report(check_id, rec, row.optimum, expected, "max W over C(n,k), exact witness set"))
            continue
        tally = _Tally()
        for g in row.witnesses:
            w = wiener_index(g)
            k = cut_vertex_mask(g.rows).bit_count()
            tally.record(w == row.optimum and k == row.k, g, lambda: f"W = {w}, k = {k}; table lists {row.optimum}")
        rep = tally.report(check_id, FORMULA, "W of the listed graphs only (no exhaustiveness claim)",
                           n=row.n, k=row.k, optimum=row.optimum, witness_count=len(row.witnesses),
                           detail="listed witnesses reproduce the tabulated W")
        out.append(replace(rep, witnesses=tuple(encode(g) for g in row.witnesses)))
    return out


# -- registry ------------------------------------------------------------------------------


CheckFn = Callable[[Scope], list[CheckReport]]

CHECKS: tuple[tuple[str, CheckFn], ...] = (
    ("edge-deletion", _check_edge_deletion),
    ("cut-vertex-split", _check_cut_vertex_split),
    ("min2conn-triangle-free", _check_min2conn_triangle_free),
    ("two-s-pendant-blocks", _check_two_s_pendant_blocks),
    ("far-blocks-pendant", _check_far_blocks_pendant),
    ("cycle-beats-shared-dumbbell", _check_cycle_beats_shared_dumbbell),
    ("cycle-vertex-distance-max", _check_cycle_vertex_distance),
    ("lollipop-pendant-dominates", _check_lollipop_pendant_dominates),
    ("pendant-block-cycle-surgery", _check_surgery),
    ("distance-max-normal-form", _check_distance_normal_form),
    ("cycle-replacement-comparison", _check_cycle_replacement),
    ("lollipop-beats-dumbbell-distance", _check_lollipop_beats_dumbbell_distance),
    ("peripherian-in-pendant-block", _check_peripherian_location),
    ("max-vertex-distance", _check_max_vertex_distance),
    ("cycle-max-wiener", _check_cycle_max_wiener),
    ("wiener-max-pendant-blocks", _check_wiener_pendant_blocks),
    ("one-cut-family-comparison", _check_one_cut_family),
    ("pendant-sharing", _check_pendant_sharing),
    ("one-cut-max-wiener", _check_one_cut_max),
    ("two-cut-family-comparison", _check_two_cut_family),
    ("two-cut-max-wiener", _check_two_cut_max),
    ("two-cut-max-wiener-families", _check_two_cut_families),
    ("three-cut-family-comparison", _check_three_cut_family),
    ("three-cut-max-wiener", _check_three_cut_max),
    ("three-cut-max-wiener-families", _check_three_cut_families),
    ("formula-oracle", _check_formula_oracle),
    ("table-1", lambda s: _check_table(1, s)),
    ("table-2", lambda s: _check_table(2, s)),
    ("table-3", lambda s: _check_table(3, s)),
)

CHECK_IDS = tuple(cid for cid, _ in CHECKS)


def select_checks(ids: Iterable[str] | None = None) -> list[tuple[str, CheckFn]]:
    """Checks whose id equals, or starts with, one of ``ids`` (all when ``ids`` is None)."""
    if ids is None:
        return list(CHECKS)
    wanted = list(ids)
    chosen = [(cid, fn) for cid, fn in CHECKS if any(cid == w or cid.startswith(w + "-") for w in wanted)]
    unknown = [w for w in wanted if not any(cid == w or cid.startswith(w + "-") for cid, _ in CHECKS)]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECK_IDS)}")
    return chosen


def check_suite(scope: Scope | None = None, ids: Iterable[str] | None = None) -> list[CheckReport]:
    scope = scope or Scope()
    reports: list[CheckReport] = []
    for _, fn in select_checks(ids):
        start = time.perf_counter()
        rows = fn(scope)
        per = (time.perf_counter() - start) * 1000 / max(len(rows), 1)
        reports.extend(replace(r, elapsed_ms=per) for r in rows)
    return reports


def suite_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.status != FAIL for r in reports)


# -- exploration beyond three cut vertices ---------------------------------------------------


@dataclass(frozen=True)
class ExploreRow:
    n: int
    k: int
    status: str
    optimum: int | None = None
    lollipop_wiener: int | None = None
    lollipop_extremal: bool | None = None
    witnesses: tuple[str, ...] = ()
    detail: str = ""


def explore_conjecture(ns: Iterable[int], ks: Iterable[int], scope: Scope | None = None) -> list[ExploreRow]:
    """Whether ``L(n, n-k)`` attains the maximum W over C(n, k); exploratory only."""
    scope = scope or Scope()
    out = []
    for n in ns:
        for k in ks:
            try:
                check_class_args(n, k)
                if n > scope.search_max_n:
                    raise EnumerationError(f"n = {n} exceeds the exhaustive cap {scope.search_max_n}")
                rec = _record(n, k, WIENER, scope)
            except EnumerationError as exc:
                out.append(ExploreRow(n, k, SKIPPED, detail=str(exc)))
                continue
            lw = extremal = None
            if n - k >= 3:
                lol = fam.build(fam.lollipop(n, n - k))
                lw = wiener_index(lol)
                extremal = _cert(lol) in rec.witnesses
            out.append(ExploreRow(n, k, "explored", rec.optimum, lw, extremal,
                                  tuple(_g6(c) for c in rec.witnesses), f"class size {rec.class_size}"))
    return out


# -- rendering ---------------------------------------------------------------------------------


def _cell(x: object) -> str:
    return "" if x is None else str(x)


def render_csv(reports: Iterable[CheckReport], timings: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.check_id, r.status, _cell(r.n), _cell(r.k), _cell(r.optimum), _cell(r.witness_count),
                    f"{r.elapsed_ms:.1f}" if timings else ""])
    return buf.getvalue()


def render_markdown(reports: list[CheckReport], timings: bool = False) -> str:
    head = ["check", "status", "evidence", "n", "k", "optimum", "witnesses", "scope", "detail"]
    if timings:
        head.append("ms")
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in reports:
        cells = [r.check_id, r.status, r.evidence, _cell(r.n), _cell(r.k), _cell(r.optimum),
                 _cell(r.witness_count), r.scope, r.detail]
        if timings:
            cells.append(f"{r.elapsed_ms:.1f}")
        lines.append("| " + " | ".join(c.replace("|", "/") for c in cells) + " |")
    failures = [r for r in reports if r.counterexample is not None]
    if failures:
        lines += ["", "Counterexamples (graph6):", ""]
        for r in failures:
            lines.append(f"- {r.check_id} n={_cell(r.n)} k={_cell(r.k)}: `{r.counterexample.graph6}` {r.counterexample.values}")
    passed = sum(r.status == PASS for r in reports)
    failed = sum(r.status == FAIL for r in reports)
    skipped = sum(r.status == SKIPPED for r in reports)
    lines += ["", f"{passed} passed, {failed} failed, {skipped} skipped"]
    return "\n".join(lines) + "\n"


def render_table_markdown(table: int, reports: list[CheckReport]) -> str:
    """A table of maxima in the layout: n, extremal graphs (graph6), W."""
    k = {1: 1, 2: 2, 3: 3}[table]
    lines = [f"### Maximum Wiener index over C(n,{k})", "", "| n | graphs attaining the maximum (graph6) | W | evidence | status |",
             "|---|---|---|---|---|"]
    for r in reports:
        if r.check_id != f"table-{table}":
            continue
        graphs = ", ".join(f"`{w}`" for w in r.witnesses) or r.detail
        lines.append(f"| {r.n} | {graphs} | {_cell(r.optimum)} | {r.evidence} | {r.status} |")
    return "\n".join(lines) + "\n"
