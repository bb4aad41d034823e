"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Enumeration rows time the prefix kernel alone; cover rows time the full
root-split search.  Each workload runs on both backends, the reported time
is the best of ``--repeat`` runs, and both backends must agree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from boxkit import kernels
from boxkit.completion import maximal_candidates, search_cover
from boxkit.graph import Graph, complete_graph, kneser_n2, line_graph
from boxkit.interval_order import _edge_table


def _random_graph(seed: int, n: int, p: float) -> Graph:
    r = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p])


def _enumerate(g: Graph, backend: str):
    return kernels.prefix_terminals(g.n, g.adj, _edge_table(g), range(g.n), backend=backend)


def workloads():
    lk5 = line_graph(complete_graph(5)).lg
    yield "enumerate L(K_5)", lambda b: _enumerate(lk5, b)
    pet = kneser_n2(5)
    yield "enumerate Petersen", lambda b: _enumerate(pet, b)
    rnd = [_random_graph(s, 10, 0.5) for s in range(5)]
    yield "enumerate 5 random G(10, 1/2)", lambda b: [_enumerate(g, b) for g in rnd]
    for n, k in ((5, 2), (6, 3)):
        masks = [c.mask for c in maximal_candidates(complete_graph(n))]
        universe = (1 << line_graph(complete_graph(n)).lg.m) - 1
        yield f"refute {k}-cover of L(K_{n})", (
            lambda b, u=universe, m=masks, k=k: search_cover(u, m, k, threads=1, backend=b)
        )


def best_of(fn, repeat: int):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true", help="emit machine-readable rows")
    args = p.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled kernels are not available; build the extension first", file=sys.stderr)
        return 2
    rows = []
    for name, fn in workloads():
        t_py, r_py = best_of(lambda: fn("python"), args.repeat)
        t_cy, r_cy = best_of(lambda: fn("cython"), args.repeat)
        if r_py != r_cy:
            print(f"backends disagree on {name}", file=sys.stderr)
            return 1
        rows.append({"workload": name, "python_s": t_py, "cython_s": t_cy, "speedup": t_py / t_cy if t_cy else float("inf")})
    if args.json:
        json.dump(rows, sys.stdout, indent=2)
        print()
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['python_s']:>9.4f}s  {r['cython_s']:>9.4f}s  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
