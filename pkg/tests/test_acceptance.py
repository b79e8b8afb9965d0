"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run alone with ``python -m pytest -v tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.  The whole file takes roughly 9 minutes
on one core, most of it in the n = 10 searches behind criteria 1 and 3.
"""

from __future__ import annotations

import subprocess
import sys
import time
from collections import Counter

import pytest

from cutwiener import families as fam
from cutwiener.canon import canonical_certificate
from cutwiener.enumeration import connected_rows
from cutwiener.search import search_max_vertex_distance, search_max_wiener
from cutwiener.verify import EXHAUSTIVE, FORMULA, PASS, Scope, check_suite, formula_oracle_cases

pytestmark = pytest.mark.slow


def _line(number: int, ok: bool, detail: str, seconds: float) -> str:
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.1f} s) {detail}"


def criterion_1() -> tuple[bool, str]:
    expected = {1: {4: 9, 5: 16, 6: 26}, 2: {5: 18, 6: 29, 7: 44, 8: 64, 9: 88},
                3: {6: 32, 7: 48, 8: 69, 9: 96, 10: 126, 11: 166, 12: 209, 13: 264}}
    reports = check_suite(Scope(search_max_n=10), ["table-1", "table-2", "table-3"])
    problems = []
    for table, rows in expected.items():
        got = {r.n: r for r in reports if r.check_id == f"table-{table}"}
        for n, w in rows.items():
            r = got.get(n)
            if r is None or r.status != PASS or r.optimum != w:
                problems.append(f"table {table} n={n}")
                continue
            want = FORMULA if n >= 11 else EXHAUSTIVE
            if r.evidence != want:
                problems.append(f"table {table} n={n} evidence {r.evidence}")
    two = {r.n: r.witness_count for r in reports if r.check_id == "table-1"}
    if (two[5], two[6]) != (2, 2):
        problems.append("table 1 witness counts")
    return not problems, "; ".join(problems) or f"{len(reports)} rows exact, witness sets equal"


def criterion_2() -> tuple[bool, str]:
    bad = []
    cases = 0
    for n in range(4, 10):
        for k in range(1, n - 2):
            cases += 1
            if search_max_vertex_distance(n, k).optimum != fam.formula_lollipop_pendant_distance(n, n - k):
                bad.append((n, k))
    return not bad, f"{cases} classes, mismatches {bad}" if bad else f"{cases} classes (4 <= n <= 9) equal the formula"


def criterion_3() -> tuple[bool, str]:
    bad = []
    targets = [(n, 1) for n in range(7, 11)] + [(10, 2)]
    for n, k in targets:
        rec = search_max_wiener(n, k, max_n=10)
        unique = (canonical_certificate(fam.build(fam.lollipop(n, n - k))),)
        if rec.witnesses != unique or rec.optimum != fam.formula_wiener_Lnk_special(n, k):
            bad.append((n, k))
    return not bad, f"mismatches {bad}" if bad else f"unique L(n,n-k) for {targets}"


DUMBBELL_BRANCHES = 8  # m1 parity x m2 parity x (one or more connecting edges)


def criterion_4() -> tuple[bool, str]:
    start = time.perf_counter()
    seen = set()
    names = Counter()
    branches = set()
    bad = []
    for name, args, spec, measure, value in formula_oracle_cases(60):
        key = (name, args)
        if key in seen:
            continue
        seen.add(key)
        names[name] += 1
        if measure(fam.build(spec)) != value:
            bad.append(key)
        if spec.kind == "dumbbell":
            m1, m2, n = args
            branches.add((m1 % 2, m2 % 2, n - m1 - m2 + 2 > 1))
    elapsed = time.perf_counter() - start
    ok = not bad and len(seen) >= 3000 and len(branches) == DUMBBELL_BRANCHES and elapsed <= 60
    return ok, f"{len(seen)} tuples over {len(names)} closed forms, {len(branches)} dumbbell branches, {len(bad)} mismatches"


INEQUALITY_CHECKS = ["cycle-beats-shared-dumbbell", "one-cut-family-comparison", "two-cut-family-comparison",
                     "three-cut-family-comparison", "lollipop-beats-dumbbell-distance", "three-cut-max-wiener-families"]


def criterion_5() -> tuple[bool, str]:
    start = time.perf_counter()
    reports = check_suite(Scope(formula_max_n=80), INEQUALITY_CHECKS)
    elapsed = time.perf_counter() - start
    ok = len(reports) == len(INEQUALITY_CHECKS) and all(r.status == PASS for r in reports) and elapsed <= 1.0
    return ok, f"{len(reports)} inequality families up to n = 80 in {elapsed:.2f} s"


STRUCTURAL_CHECKS = ["edge-deletion", "cut-vertex-split", "two-s-pendant-blocks", "far-blocks-pendant",
                     "min2conn-triangle-free"]


def criterion_6() -> tuple[bool, str]:
    reports = check_suite(Scope(structural_max_n=8), STRUCTURAL_CHECKS)
    failed = [r.check_id for r in reports if r.status != PASS]
    return not failed and len(reports) == len(STRUCTURAL_CHECKS), (
        f"failures {failed}" if failed else f"{len(reports)} properties, zero violations, n <= 8")


CONNECTED = {4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def criterion_7() -> tuple[bool, str]:
    counts = {n: len(set(connected_rows(n))) for n in CONNECTED}
    base = Counter(connected_rows(9))
    invariant = all(Counter(connected_rows(9, partitions=p, cache=False)) == base for p in (2, 8))
    return counts == CONNECTED and invariant, f"counts {list(counts.values())}, partitions 1/2/8 identical: {invariant}"


def _verify_table_2(workers: int) -> bytes:
    cmd = [sys.executable, "-m", "cutwiener", "verify", "--table", "2", "--workers", str(workers)]
    return subprocess.run(cmd, capture_output=True, check=True).stdout


def criterion_8() -> tuple[bool, str]:
    outputs = [_verify_table_2(w) for w in (1, 8, 1, 8)]
    same = len(set(outputs)) == 1
    return same, f"{len(outputs)} runs, {len(outputs[0])} bytes each, identical: {same}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _run(number: int) -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = CRITERIA[number - 1]()
    return ok, _line(number, ok, detail, time.perf_counter() - start)


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    ok, line = _run(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(i) for i in range(1, len(CRITERIA) + 1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
