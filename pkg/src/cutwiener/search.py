"""Exhaustive extremal searches over C(n, k) and ingested graph streams."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .canon import canonical_rows, certificate_bytes, graph_from_certificate
from .enumeration import (
    GENERATION_CAP,
    EnumerationError,
    _class_certs,
    _rows_of,
    _split,
    check_class_args,
)
from .graph import Graph, _distance_sum, is_connected, wiener_of_rows
from .structure import cut_vertex_mask

WIENER = "wiener"
DISTANCE = "distance"
OBJECTIVES = (WIENER, DISTANCE)

Rows = tuple[int, ...]


def max_vertex_distance_of_rows(rows: Rows) -> int:
    return max(_distance_sum(rows, v)[0] for v in range(len(rows)))


_SCORERS = {WIENER: wiener_of_rows, DISTANCE: max_vertex_distance_of_rows}


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    k: int | None
    objective: str
    optimum: int
    witnesses: tuple[bytes, ...]
    class_size: int
    elapsed: float = field(default=0.0, compare=False)

    def witness_graphs(self) -> list[Graph]:
        return [graph_from_certificate(c) for c in self.witnesses]

    def rescore(self) -> list[int]:
        score = _SCORERS[self.objective]
        return [score(g.rows) for g in self.witness_graphs()]


def merge(parts: Iterable[tuple[int | None, set[bytes], int]]) -> tuple[int | None, set[bytes], int]:
    """Max-then-union fold of partial ``(optimum, witnesses, count)`` triples."""
    best: int | None = None
    wit: set[bytes] = set()
    total = 0
    for opt, w, count in parts:
        total += count
        if opt is None:
            continue
        if best is None or opt > best:
            best, wit = opt, set(w)
        elif opt == best:
            wit |= w
    return best, wit, total


def _fold_certs(job: tuple[str, list[bytes]]) -> tuple[int | None, set[bytes], int]:
    objective, certs = job
    score = _SCORERS[objective]
    best = None
    wit: set[bytes] = set()
    for c in certs:
        s = score(_rows_of(c))
        if best is None or s > best:
            best, wit = s, {c}
        elif s == best:
            wit.add(c)
    return best, wit, len(certs)


def _search_class(n: int, k: int, objective: str, partitions: int, workers: int, max_n: int) -> ExtremalRecord:
    check_class_args(n, k)
    if n > max_n:
        raise EnumerationError(f"generation for n = {n} exceeds the cap max_n = {max_n}")
    start = time.perf_counter()
    certs = _class_certs(n, k, partitions, workers)
    jobs = [(objective, [certs[i] for i in grp]) for grp in _split(certs, partitions)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_fold_certs, jobs))
    else:
        parts = [_fold_certs(j) for j in jobs]
    best, wit, total = merge(parts)
    if best is None:
        raise EnumerationError(f"C({n},{k}) is empty")
    return ExtremalRecord(n, k, objective, best, tuple(sorted(wit)), total, time.perf_counter() - start)


def search_stream(graphs: Iterable[Graph], objective: str = WIENER, n: int | None = None, k: int | None = None) -> ExtremalRecord:
    """Extremal search over an arbitrary stream; witnesses are certified canonically."""
    score = _SCORERS[objective]
    start = time.perf_counter()
    best = None
    wit: set[bytes] = set()
    count = 0
    for g in graphs:
        if not is_connected(g):
            raise EnumerationError("searched graphs must be connected")
        count += 1
        s = score(g.rows)
        if best is None or s > best:
            best, wit = s, {certificate_bytes(canonical_rows(g.rows))}
        elif s == best:
            wit.add(certificate_bytes(canonical_rows(g.rows)))
        if n is None:
            n = g.n
        if k is None:
            k = cut_vertex_mask(g.rows).bit_count()
    if best is None or n is None:
        raise EnumerationError("empty graph stream: nothing to search")
    return ExtremalRecord(n, k, objective, best, tuple(sorted(wit)), count, time.perf_counter() - start)


def search_max_wiener(
    n: int, k: int, partitions: int = 1, workers: int = 1, max_n: int = GENERATION_CAP
) -> ExtremalRecord:
    return _search_class(n, k, WIENER, partitions, workers, max_n)


def search_max_vertex_distance(
    n: int, k: int, partitions: int = 1, workers: int = 1, max_n: int = GENERATION_CAP
) -> ExtremalRecord:
    return _search_class(n, k, DISTANCE, partitions, workers, max_n)
