"""Command-line entry point: ``cutwiener <subcommand> ...``.

Exit status: 0 success, 1 a verification check failed, 2 usage error,
3 input/output or decode error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Iterator, Sequence, TextIO

from . import families as fam
from .enumeration import GENERATION_CAP, EnumerationConfig, EnumerationError
from .graph import DisconnectedGraphError, Graph, GraphError, vertex_distances
from .graph6 import Graph6Error, encode, read_lines
from .search import OBJECTIVES, WIENER, search_max_vertex_distance, search_max_wiener, search_stream
from .structure import decompose
from .verify import (
    CHECK_IDS,
    CSV_COLUMNS,
    SKIPPED,
    Scope,
    check_suite,
    dumbbell_max_vertex_distance,
    explore_conjecture,
    render_csv,
    render_markdown,
    render_table_markdown,
    suite_passed,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

DEFAULT_MAX_N = 9


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


# -- formulas exposed on the command line --------------------------------------------

FORMULAS: dict[str, tuple[tuple[str, ...], Callable[..., int]]] = {
    "path-vertex-distance": (("n", "i"), fam.formula_path_vertex_distance),
    "path-wiener": (("n",), fam.formula_wiener_path),
    "cycle-vertex-distance": (("n",), fam.formula_cycle_vertex_distance),
    "cycle-wiener": (("n",), fam.formula_wiener_cycle),
    "lollipop-wiener": (("n", "g"), fam.formula_wiener_lollipop),
    "lollipop-pendant-distance": (("n", "g"), fam.formula_lollipop_pendant_distance),
    "lollipop-wiener-special": (("n", "k"), fam.formula_wiener_Lnk_special),
    "dumbbell-wiener": (("m1", "m2", "n"), fam.formula_wiener_dumbbell),
    "dumbbell-max-distance": (("m1", "m2", "n"), dumbbell_max_vertex_distance),
    "forked-wiener": (("n", "g"), fam.formula_wiener_forked_any),
    "forked-wiener-polynomial": (("n",), fam.formula_wiener_forked),
}


# -- input helpers ---------------------------------------------------------------------------


def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _numbered_graphs(path: str | None, strict: bool) -> Iterator[tuple[int, Graph]]:
    stream = _open_input(path)
    try:
        for number, item in read_lines(stream, strict=strict):
            if isinstance(item, Graph6Error):
                print(f"warning: {item}", file=sys.stderr)
                continue
            yield number, item
    except Graph6Error as exc:
        raise InputError(str(exc)) from None
    except UnicodeDecodeError as exc:
        raise InputError(f"input is not ASCII graph6: {exc.reason}") from None
    finally:
        if stream is not sys.stdin:
            stream.close()


def _check_max_n(n: int, max_n: int) -> None:
    if max_n > GENERATION_CAP:
        raise UsageError(f"--max-n cannot exceed {GENERATION_CAP}")
    if n > max_n:
        raise UsageError(f"n = {n} exceeds --max-n {max_n}; pass --max-n {n} to run it anyway (n <= {GENERATION_CAP})")


# -- subcommands ----------------------------------------------------------------------------------


def cmd_wiener(args: argparse.Namespace, out: TextIO) -> int:
    for number, g in _numbered_graphs(args.input, not args.lenient):
        try:
            d = vertex_distances(g)
        except DisconnectedGraphError:
            raise InputError(f"line {number}: graph is disconnected; W is undefined") from None
        top = max(d)
        peri = ",".join(f"v{v}" for v in range(g.n) if d[v] == top)
        out.write(f"W={sum(d) // 2} Dmax={top} peripherian={peri}\n")
    return EXIT_OK


def _fmt_set(items) -> str:
    return "[" + ",".join(str(x) for x in items) + "]"


def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    for number, g in _numbered_graphs(args.input, not args.lenient):
        try:
            dec = decompose(g)
        except DisconnectedGraphError:
            raise InputError(f"line {number}: graph is disconnected; blocks are defined per component") from None
        blocks = " ".join(
            "{" + ",".join(map(str, blk)) + "}:" + kind for blk, kind in zip(dec.blocks, dec.kinds)
        )
        out.write(
            f"n={g.n} k={dec.k} cut={_fmt_set(sorted(dec.cut_vertices))} blocks={len(dec.blocks)} {blocks}"
            f" s-pendant-vertices={_fmt_set(sorted(dec.s_pendant_vertices))}\n"
        )
    return EXIT_OK


def _family_spec(kind: str, params: Sequence[int]) -> fam.FamilySpec:
    try:
        return fam.FamilySpec(kind, tuple(params))
    except fam.FamilyParameterError as exc:
        raise UsageError(str(exc)) from None


def cmd_family(args: argparse.Namespace, out: TextIO) -> int:
    spec = _family_spec(args.kind, args.params)
    try:
        g = fam.build(spec)
    except fam.FamilyParameterError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "plain":
        out.write(f"{spec.label()} n={g.n} edges=" + " ".join(f"{u}-{v}" for u, v in g.edges()) + "\n")
    else:
        out.write(encode(g) + "\n")
    return EXIT_OK


def cmd_formula(args: argparse.Namespace, out: TextIO) -> int:
    names, fn = FORMULAS[args.name]
    if len(args.params) != len(names):
        raise UsageError(f"{args.name} takes {len(names)} parameter(s): {' '.join(names)}")
    try:
        out.write(f"{fn(*args.params)}\n")
    except (fam.FamilyParameterError, ArithmeticError, ValueError) as exc:
        raise UsageError(f"{args.name}{tuple(args.params)}: {exc}") from None
    return EXIT_OK


def cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    label = "W" if args.objective == WIENER else "D"
    try:
        if args.input is not None:
            cfg = EnumerationConfig(n=max(args.n or 1, 1), k=args.k)
            graphs = (g for _, g in _numbered_graphs(args.input, not args.lenient))
            selected = (g for g in graphs if (args.n is None or g.n == args.n) and cfg.accepts(g))
            rec = search_stream(selected, args.objective, args.n, args.k)
        else:
            if args.n is None or args.k is None:
                raise UsageError("search needs --n and --k (or --input FILE)")
            _check_max_n(args.n, args.max_n)
            fn = search_max_wiener if args.objective == WIENER else search_max_vertex_distance
            rec = fn(args.n, args.k, partitions=args.partitions, workers=args.workers, max_n=args.max_n)
    except EnumerationError as exc:
        raise UsageError(str(exc)) from None
    noun = "witness" if len(rec.witnesses) == 1 else "witnesses"
    out.write(f"max {label} = {rec.optimum}, {len(rec.witnesses)} {noun}\n")
    for g in rec.witness_graphs():
        out.write(encode(g) + "\n")
    return EXIT_OK


def _scope(args: argparse.Namespace) -> Scope:
    if args.max_n > GENERATION_CAP:
        raise UsageError(f"--max-n cannot exceed {GENERATION_CAP}")
    if args.max_n < 4:
        raise UsageError("--max-n must be at least 4")
    return Scope(search_max_n=args.max_n, seed=args.seed, workers=args.workers, partitions=args.partitions,
                 samples=getattr(args, "samples", 1000))


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    ids: list[str] = []
    if args.table:
        ids += [f"table-{t}" for t in args.table]
    if args.lemma:
        ids += args.lemma
    try:
        reports = check_suite(_scope(args), ids or None)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    text = render_csv(reports, args.timings) if args.format == "csv" else render_markdown(reports, args.timings)
    out.write(text)
    return EXIT_OK if suite_passed(reports) else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace, out: TextIO) -> int:
    tables = args.table or [1, 2, 3]
    reports = check_suite(_scope(args), [f"table-{t}" for t in tables])
    out.write("\n".join(render_table_markdown(t, reports) for t in tables))
    return EXIT_OK if suite_passed(reports) else EXIT_CHECK_FAILED


def cmd_explore(args: argparse.Namespace, out: TextIO) -> int:
    if args.n_min > args.n_max or args.k_min > args.k_max:
        raise UsageError("empty range")
    if args.k_min < 4:
        raise UsageError("explore covers k >= 4; smaller k are settled by `verify`")
    rows = explore_conjecture(range(args.n_min, args.n_max + 1), range(args.k_min, args.k_max + 1), _scope(args))
    out.write("Exploratory scan: is L(n, n-k) a maximiser of W over C(n,k)? (no pass/fail semantics)\n\n")
    out.write("| n | k | max W | W(L(n,n-k)) | lollipop extremal | witnesses (graph6) | note |\n")
    out.write("|---|---|---|---|---|---|---|\n")
    for r in rows:
        flag = "" if r.lollipop_extremal is None else ("yes" if r.lollipop_extremal else "no")
        wit = ", ".join(f"`{w}`" for w in r.witnesses)
        opt = "" if r.optimum is None else r.optimum
        lw = "" if r.lollipop_wiener is None else r.lollipop_wiener
        note = r.detail if r.status == SKIPPED else ""
        out.write(f"| {r.n} | {r.k} | {opt} | {lw} | {flag} | {wit} | {note} |\n")
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default=None, metavar="FILE", help="graph6 file (default: standard input)")
    p.add_argument("--lenient", action="store_true", help="skip malformed lines with a warning instead of aborting")


def _add_search_scope(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help=f"largest order enumerated exhaustively (default {DEFAULT_MAX_N}, at most {GENERATION_CAP})")
    p.add_argument("--workers", type=int, default=1, help="worker processes (results never depend on this)")
    p.add_argument("--partitions", type=int, default=None, help="work partitions (default: one per worker)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutwiener", description="Wiener index extremes over graphs with k cut vertices.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log enumeration progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("wiener", help="W, max vertex distance and peripherian vertices of graph6 input")
    _add_input(p)
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("analyze", help="block / cut-vertex report per graph6 input line")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("kind", choices=fam.KINDS)
    p.add_argument("params", type=int, nargs="+",
                   help="path/cycle/star: n; lollipop: n g; dumbbell: m1 m2 n; forked: n g")
    p.add_argument("--format", choices=("graph6", "plain"), default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("formula", help="evaluate a closed form exactly")
    p.add_argument("name", choices=sorted(FORMULAS))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("search", help="exhaustive maximum of W (or vertex distance) over C(n,k)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--objective", choices=OBJECTIVES, default=WIENER)
    p.add_argument("--input", metavar="FILE", help="search a graph6 stream instead of enumerating ('-' for stdin)")
    p.add_argument("--lenient", action="store_true", help="skip malformed input lines")
    _add_search_scope(p)
    p.set_defaults(func=cmd_search)

    csv_help = "CSV columns: " + ",".join(CSV_COLUMNS) + " (elapsed_ms is blank unless --timings)"
    p = sub.add_parser("verify", help="run the check suite", epilog=csv_help + ". Check ids: " + ", ".join(CHECK_IDS))
    p.add_argument("--table", type=int, choices=(1, 2, 3), action="append", help="only the given table (repeatable)")
    p.add_argument("--lemma", action="append", metavar="ID", help="only checks with this id or id prefix (repeatable)")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    p.add_argument("--samples", type=int, default=1000, help="instances per randomized check")
    p.add_argument("--timings", action="store_true", help="include wall times (output is then not reproducible)")
    _add_search_scope(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="reproduce the tables of maxima as Markdown")
    p.add_argument("--table", type=int, choices=(1, 2, 3), action="append")
    p.add_argument("--seed", type=int, default=0)
    _add_search_scope(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("explore", help="scan k >= 4: is L(n,n-k) extremal?")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--k-min", type=int, default=4)
    p.add_argument("--k-max", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    _add_search_scope(p)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "workers"):
            if args.workers < 1 or (args.partitions is not None and args.partitions < 1):
                parser.error("--workers and --partitions must be positive")
            if args.partitions is None:
                args.partitions = args.workers
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
