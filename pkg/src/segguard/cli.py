"""Command line: ``segguard {solve,reduce,generate,render,verify,bench}``.

Exit codes: 0 ok, 1 usage or parse error, 2 verification failure,
3 no solution within ``--cap``.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import bench, formats, generate, reduction, solver
from .arrangement import ArrangementError, InstanceError, NotATreeError, build_arrangement, is_forest
from .render import render_svg

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INFEASIBLE = 0, 1, 2, 3

AUTO_EXACT_MAX_INTERSECTIONS = 20


@dataclass
class RunReport:
    algorithm: str
    guards: tuple
    wall_time: float
    verdict: bool
    notes: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.guards)

    def comments(self) -> list[str]:
        return [
            f"algorithm {self.algorithm}",
            f"time {self.wall_time:.6f}s",
            f"verified {'yes' if self.verdict else 'NO'}",
        ] + self.notes


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        formats.write_atomic(out, text)
    else:
        sys.stdout.write(text)


def pick_algorithm(arr) -> str:
    if is_forest(arr):
        return "tree"
    if len(arr.intersections) <= AUTO_EXACT_MAX_INTERSECTIONS:
        return "exact"
    return "greedy"


def run_solver(arr, algo: str, cap: Optional[int] = None) -> RunReport:
    chosen = pick_algorithm(arr) if algo == "auto" else algo
    t = time.perf_counter()
    notes = []
    if chosen == "exact":
        guards = solver.solve_exact(arr, cap=cap)
        notes.append("optimal yes" if cap is None else f"within cap {cap}")
    elif chosen == "tree":
        guards = solver.solve_tree(arr)
        notes.append("optimal yes (forest)")
    elif chosen == "greedy":
        guards = solver.solve_greedy(arr)
        notes.append("ratio bound 1 + ln n")
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    elapsed = time.perf_counter() - t
    if algo == "auto":
        notes.insert(0, f"auto chose {chosen}")
    # The verdict is recomputed here, never taken from the solver.
    return RunReport(chosen, guards.ids, elapsed, solver.is_guard_set(arr, guards.ids), notes)


def cmd_solve(args) -> int:
    inst = formats.parse_instance(_read(args.file))
    arr = build_arrangement(inst)
    try:
        report = run_solver(arr, args.algo, args.cap)
    except solver.InfeasibleAtCap as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.format == "svg":
        _write(render_svg(arr, report.guards), args.out)
    else:
        _write(formats.emit_solution(arr, report.guards, report.comments()), args.out)
    return EXIT_OK if report.verdict else EXIT_VERIFY


def cmd_verify(args) -> int:
    inst = formats.parse_instance(_read(args.file))
    arr = build_arrangement(inst)
    try:
        ids = formats.resolve_solution(arr, formats.parse_solution(_read(args.solution)))
    except formats.SolutionMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    ok = solver.is_guard_set(arr, ids)
    unseen = sorted(set(arr.segments) - set().union(*(arr.segments_at_vertex[v] for v in ids))) if ids else sorted(arr.segments)
    print(f"guards {len(ids)}: {'valid' if ok else 'INVALID'}" + ("" if ok else f"; unguarded segments {unseen}"))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_reduce(args) -> int:
    g = formats.parse_graph(_read(args.graph))
    emb = formats.parse_embedding(_read(args.embedding)) if args.embedding else None
    red = reduction.reduce_3pvc_to_gss(g, args.M, embedding=emb)
    cert = red.certificate
    comments = [
        f"reduced from a planar graph with n={g.n}, m={len(g.edges)}",
        f"K {red.K}",
        cert.summary(),
    ] + [f"segment {i} = edge {u} {v}" for i, (u, v) in enumerate(red.edge_of_segment)]
    _write(formats.emit_instance(red.instance, comments), args.out)
    if args.out and args.out != "-":
        print(cert.summary())
    return EXIT_OK if cert.ok else EXIT_VERIFY


def cmd_generate(args) -> int:
    inst = generate.generate(args.family, args.k, args.seed)
    _write(formats.emit_instance(inst, [f"generated: {args.family} {args.k} seed {args.seed}"]), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    inst = formats.parse_instance(_read(args.file))
    arr = build_arrangement(inst)
    guards = []
    if args.solution:
        try:
            guards = formats.resolve_solution(arr, formats.parse_solution(_read(args.solution)))
        except formats.SolutionMismatch as exc:
            print(f"mismatch: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        if not solver.is_guard_set(arr, guards):
            print("solution does not guard every segment", file=sys.stderr)
            return EXIT_VERIFY
    if args.format == "text":
        _write(arr.serialize(), args.out)
    else:
        _write(render_svg(arr, guards), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    results = bench.run_bench(args.out)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VERIFY if failed else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="segguard", description="Guard placement on sets of line segments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="place guards on an instance file")
    s.add_argument("file")
    s.add_argument("--algo", choices=("exact", "greedy", "tree", "auto"), default="auto")
    s.add_argument("--cap", type=int)
    s.add_argument("--format", choices=("text", "svg"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a solution file against an instance")
    s.add_argument("file")
    s.add_argument("solution")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce", help="vertex cover graph to guarding instance")
    s.add_argument("graph")
    s.add_argument("M", type=int, help="vertex cover bound, carried over as the guard bound K")
    s.add_argument("--embedding", help="grid embedding file to use instead of computing one")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("generate", help="write an instance from a family")
    s.add_argument("family", choices=generate.FAMILIES)
    s.add_argument("k", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("render", help="draw an instance, optionally with guards")
    s.add_argument("file")
    s.add_argument("solution", nargs="?")
    s.add_argument("--format", choices=("text", "svg"), default="svg")
    s.add_argument("--out")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("bench", help="run the acceptance criteria")
    s.add_argument("--out", help="directory for TSV reports and figures")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.FormatError, InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotATreeError as exc:
        print(f"not-a-tree: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (reduction.ReductionError, ArrangementError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
