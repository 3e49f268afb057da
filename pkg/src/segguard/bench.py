"""Acceptance bench: every criterion checked against an independent oracle.

Each ``criterion_*`` function returns a :class:`CriterionResult`; per-case
rows go to ``cases.tsv`` and a summary line per criterion to
``acceptance.tsv`` when an output directory is given, with figures next to
them.
"""

from __future__ import annotations

import csv
import functools
import math
import os
import random
import time
from dataclasses import dataclass, field

import networkx as nx

from . import reduction, solver
from .arrangement import build_arrangement, is_forest
from .generate import random_instance, random_tree, vc_separation
from .geometry import eta_and_diameter, orientation, pt
from .oracles import brute_force_signature, min_guards_brute_force, min_set_cover_size, min_vertex_cover


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0
    cases: list = field(default_factory=list)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name}: {self.detail} ({self.elapsed:.1f}s)"


def _timed(fn):
    def run(*args, **kwargs):
        t = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- corpora ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def tree_corpus(count: int = 200, k: int = 12):
    return tuple(random_tree(k, seed) for seed in range(count))


@functools.lru_cache(maxsize=None)
def random_corpus(count: int = 100, max_n: int = 12):
    return tuple(random_instance(1 + seed % max_n, seed) for seed in range(count))


@functools.lru_cache(maxsize=None)
def crossing_corpus(count: int = 100, max_n: int = 12):
    """Random instances with at least two segments and one intersection."""
    out = []
    seed = 0
    while len(out) < count:
        inst = random_instance(2 + seed % (max_n - 1), 10_000 + seed)
        seed += 1
        if build_arrangement(inst).intersections:
            out.append(inst)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def graph_corpus():
    """Connected planar graphs of max degree 3: all of them up to 7 vertices, plus some on 8."""
    graphs = []
    for G in nx.graph_atlas_g():
        if 2 <= len(G) <= 7 and nx.is_connected(G) and max(d for _, d in G.degree()) <= 3 and nx.check_planarity(G)[0]:
            graphs.append(G)
    eight = [nx.cubical_graph(), nx.cycle_graph(8), nx.path_graph(8), nx.ladder_graph(4)]
    rng = random.Random(8)
    for seed in range(40):
        G = nx.random_regular_graph(3, 8, seed=seed)
        if nx.check_planarity(G)[0]:
            H = G.copy()
            for e in rng.sample(sorted(H.edges), 2):
                H.remove_edge(*e)
                if not nx.is_connected(H):
                    H.add_edge(*e)
            eight += [G, H]
    seen = set()
    for G in eight:
        key = nx.weisfeiler_lehman_graph_hash(G)
        if key not in seen and nx.is_connected(G):
            seen.add(key)
            graphs.append(G)
        if len(seen) >= 12:
            break
    return tuple(reduction.PlanarCubicGraph.from_networkx(G) for G in graphs)


@functools.lru_cache(maxsize=None)
def point_corpus(count: int = 100):
    out = []
    for seed in range(count):
        rng = random.Random(seed)
        while True:
            k = rng.randint(3, 10)
            pts = list({pt(rng.randint(0, 100), rng.randint(0, 100)) for _ in range(k)})
            if len(pts) >= 3 and any(orientation(pts[0], pts[1], p) != 0 for p in pts[2:]):
                break
        out.append(tuple(pts))
    return tuple(out)


# -- criteria -----------------------------------------------------------


@_timed
def criterion_tree_optimality(count: int = 200) -> CriterionResult:
    cases = []
    t0 = time.perf_counter()
    for seed, inst in enumerate(tree_corpus(count)):
        arr = build_arrangement(inst)
        got = solver.solve_tree(arr)
        want = min_guards_brute_force(inst.segments)
        ok = is_forest(arr) and solver.is_guard_set(arr, got) and len(got) == want
        cases.append({"case": f"random-tree 12 {seed}", "expected": want, "got": len(got), "ok": ok})
    elapsed = time.perf_counter() - t0
    matched = sum(c["ok"] for c in cases)
    passed = matched == count and elapsed < 60
    return CriterionResult(1, "tree algorithm optimality", passed, f"{matched}/{count} match brute force, {elapsed:.1f}s < 60s", cases=cases)


@_timed
def criterion_reduction_equivalence() -> CriterionResult:
    cases = []
    t0 = time.perf_counter()
    graphs = graph_corpus()
    for g in graphs:
        red = reduction.reduce_3pvc_to_gss(g, 0)
        arr = build_arrangement(red.instance)
        want = min_vertex_cover(g.n, g.edges)
        got = len(solver.solve_exact(arr))
        cases.append({"case": f"graph n={g.n} m={len(g.edges)} {g.edges}", "expected": want, "got": got, "ok": want == got})
    elapsed = time.perf_counter() - t0
    matched = sum(c["ok"] for c in cases)
    passed = matched == len(graphs) and len(graphs) >= 50 and elapsed < 300
    return CriterionResult(2, "reduction equivalence", passed, f"{matched}/{len(graphs)} graphs, min VC = GSS optimum, {elapsed:.1f}s < 300s", cases=cases)


@_timed
def criterion_general_position() -> CriterionResult:
    cases = []
    totals = dict(collinear=0, crossings=0, budget=0, clearance=0, bounds=0)
    for g in graph_corpus():
        cert = reduction.reduce_3pvc_to_gss(g, 0).certificate
        totals["collinear"] += len(cert.collinear_pairs)
        totals["crossings"] += len(cert.crossings)
        totals["budget"] += len(cert.budget_violations)
        totals["clearance"] += len(cert.clearance_violations)
        totals["bounds"] += len(cert.bound_violations)
        cases.append({"case": f"graph n={g.n} m={len(g.edges)} moved={cert.moved}", "expected": "ok", "got": "ok" if cert.ok else str(cert.first_violation()), "ok": cert.ok})
    passed = all(c["ok"] for c in cases) and not any(totals.values())
    detail = ", ".join(f"{k}={v}" for k, v in totals.items()) + f" over {len(cases)} runs"
    return CriterionResult(3, "general-position certificate", passed, detail, cases=cases)


@_timed
def criterion_grid_bound(count: int = 100) -> CriterionResult:
    cases = []
    for seed, pts in enumerate(point_corpus(count)):
        eta_sq, diam_sq = eta_and_diameter(pts)
        prod = eta_sq * diam_sq
        cases.append({"case": f"points seed {seed} k={len(pts)}", "expected": ">= 1", "got": str(prod), "ok": prod >= 1})
    ok = sum(c["ok"] for c in cases)
    return CriterionResult(4, "eta * diameter bound", ok == count, f"eta_sq*diam_sq >= 1 in {ok}/{count}", cases=cases)


@_timed
def criterion_sufficiency(count: int = 100) -> CriterionResult:
    cases = []
    for i, inst in enumerate(crossing_corpus(count)):
        arr = build_arrangement(inst)
        g = solver.sufficiency_bound(arr)
        n = len(inst.segments)
        ok = len(g) <= n - 1 and solver.is_guard_set(arr, g)
        cases.append({"case": f"crossing instance {i} n={n}", "expected": f"<= {n - 1}", "got": len(g), "ok": ok})
    ok = sum(c["ok"] for c in cases)
    return CriterionResult(5, "n-1 guards suffice", ok == count, f"{ok}/{count} within n-1 and verified", cases=cases)


@_timed
def criterion_greedy_ratio() -> CriterionResult:
    cases = []
    corpora = [("random-tree", tree_corpus()), ("random", random_corpus()), ("crossing", crossing_corpus())]
    for label, insts in corpora:
        for i, inst in enumerate(insts):
            arr = build_arrangement(inst)
            opt = len(solver.solve_exact(arr))
            gr = solver.solve_greedy(arr)
            n = len(inst.segments)
            bound = (1 + math.log(n)) * opt
            ok = solver.is_guard_set(arr, gr) and len(gr) <= bound
            cases.append({"case": f"{label} {i} n={n}", "expected": f"<= {bound:.3f} (opt {opt})", "got": len(gr), "ok": ok, "n": n, "opt": opt})
    ok = sum(c["ok"] for c in cases)
    worst = max(c["got"] / c["opt"] for c in cases if c["opt"])
    return CriterionResult(6, "greedy within 1 + ln n", ok == len(cases), f"{ok}/{len(cases)} instances, worst ratio {worst:.3f}", cases=cases)


@_timed
def criterion_arrangement_oracle(count: int = 100) -> CriterionResult:
    cases = []
    for seed, inst in enumerate(random_corpus(count)):
        ok = build_arrangement(inst).signature() == brute_force_signature(inst.segments)
        cases.append({"case": f"random {len(inst.segments)} {seed}", "expected": "equal", "got": "equal" if ok else "differs", "ok": ok})
    ok = sum(c["ok"] for c in cases)
    return CriterionResult(7, "arrangement matches brute force", ok == count, f"{ok}/{count} identical on all derived sets", cases=cases)


@_timed
def criterion_vc_separation() -> CriterionResult:
    inst = vc_separation()
    arr = build_arrangement(inst)
    index = {v: i for i, v in enumerate(sorted(arr.vertices))}
    vc = min_vertex_cover(len(index), [(index[e.u], index[e.v]) for e in arr.edges.values()])
    gss = min_set_cover_size(arr.segments, arr.segments_at_vertex)
    exact = len(solver.solve_exact(arr))
    passed = vc == 4 and gss == 2 and exact == 2
    case = {"case": "two crossing pencils", "expected": "vc=4 gss=2", "got": f"vc={vc} gss={gss} exact={exact}", "ok": passed}
    return CriterionResult(8, "vertex cover vs guards separation", passed, case["got"], cases=[case])


CRITERIA = [
    criterion_tree_optimality,
    criterion_reduction_equivalence,
    criterion_general_position,
    criterion_grid_bound,
    criterion_sufficiency,
    criterion_greedy_ratio,
    criterion_arrangement_oracle,
    criterion_vc_separation,
]


# -- report -------------------------------------------------------------


def run_bench(out_dir=None, echo=print) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        res = crit()
        results.append(res)
        if echo:
            echo(res.line())
    if out_dir:
        write_report(results, out_dir)
    return results


def write_report(results, out_dir) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "acceptance.tsv"), "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["criterion", "name", "passed", "cases", "seconds", "detail"])
        for r in results:
            w.writerow([r.number, r.name, int(r.passed), len(r.cases), f"{r.elapsed:.3f}", r.detail])
    with open(os.path.join(out_dir, "cases.tsv"), "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["criterion", "case", "expected", "got", "ok"])
        for r in results:
            for c in r.cases:
                w.writerow([r.number, c["case"], c["expected"], c["got"], int(c["ok"])])
    return plot_results(results, out_dir)


def plot_results(results, out_dir) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_num = {r.number: r for r in results}
    written = []

    if 1 in by_num:
        cases = by_num[1].cases
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        xs = [c["expected"] for c in cases]
        ys = [c["got"] for c in cases]
        ax.scatter(xs, ys, s=18, alpha=0.4)
        lim = max(xs + ys) + 1
        ax.plot([0, lim], [0, lim], "k--", lw=0.8)
        ax.set_xlabel("brute-force optimum")
        ax.set_ylabel("tree algorithm guards")
        ax.set_title("Forests: leaf elimination vs brute force")
        written.append(_save(fig, out_dir, "tree_vs_bruteforce.png"))

    if 6 in by_num:
        cases = by_num[6].cases
        fig, ax = plt.subplots(figsize=(5.5, 4))
        ax.scatter([c["n"] for c in cases], [c["got"] / c["opt"] for c in cases], s=14, alpha=0.4, label="greedy / optimum")
        ns = range(1, max(c["n"] for c in cases) + 1)
        ax.plot(list(ns), [1 + math.log(n) for n in ns], "r-", lw=1, label="1 + ln n")
        ax.set_xlabel("segments n")
        ax.set_ylabel("ratio")
        ax.legend(frameon=False)
        ax.set_title("Greedy set cover ratio")
        written.append(_save(fig, out_dir, "greedy_ratio.png"))

    if 2 in by_num:
        cases = by_num[2].cases
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        ax.scatter([c["expected"] for c in cases], [c["got"] for c in cases], s=18, alpha=0.4)
        lim = max(c["expected"] for c in cases) + 1
        ax.plot([0, lim], [0, lim], "k--", lw=0.8)
        ax.set_xlabel("minimum vertex cover")
        ax.set_ylabel("guards on reduced instance")
        ax.set_title("Reduction corpus")
        written.append(_save(fig, out_dir, "reduction_equivalence.png"))
    return written


def _save(fig, out_dir, name):
    import matplotlib.pyplot as plt

    path = os.path.join(out_dir, name)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
