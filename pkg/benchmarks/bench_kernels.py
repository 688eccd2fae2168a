"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--graphs 300] [--enum-n 8] [--json]
"""
from __future__ import annotations

import argparse
import json
import random
import time
from itertools import combinations

from turanlf import _pykernels
from turanlf.graph import Graph

try:
    from turanlf import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def sample_graphs(count: int, n_lo: int, n_hi: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.random()
        out.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p]))
    return out


def enumerate_count(k, n: int) -> int:
    total = 0
    stack = [((0,), 1, [])]
    while stack:
        adj, level, gens = stack.pop()
        if level == n:
            total += 1
            continue
        for child, cg in k.augment(adj, level, gens, 0, 0, 0, level + 1 < n):
            stack.append((child, level + 1, cg))
    return total


def timed(fn) -> tuple[float, object]:
    t0 = time.perf_counter()
    res = fn()
    return time.perf_counter() - t0, res


def run(graphs: int, enum_n: int, seed: int) -> list[dict]:
    small = sample_graphs(graphs, 4, 12, seed)
    tasks = {
        "count_cliques(r=3..5)": lambda k: [k.count_cliques(g.adj, g.n, r) for g in small for r in (3, 4, 5)],
        "matching_number": lambda k: [k.matching_number(g.adj, g.n, 0) for g in small],
        "linear_forest_number": lambda k: [k.linear_forest_number(g.adj, g.n, 0) for g in small],
        "canon": lambda k: [list(k.canon(g.adj, g.n)[0]) for g in small],
        f"enumerate(n={enum_n})": lambda k: enumerate_count(k, enum_n),
    }
    rows = []
    for name, task in tasks.items():
        t_py, r_py = timed(lambda: task(_pykernels))
        row = {"task": name, "python_s": round(t_py, 4)}
        if _ckernels is not None:
            t_c, r_c = timed(lambda: task(_ckernels))
            if r_c != r_py:
                raise SystemExit(f"backends disagree on {name}")
            row.update(cython_s=round(t_c, 4), speedup=round(t_py / t_c, 1) if t_c else None)
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--enum-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.graphs, args.enum_n, args.seed)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if _ckernels is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'task':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for r in rows:
        print(f"{r['task']:<24}{r['python_s']:>12.4f}{r.get('cython_s', float('nan')):>12.4f}"
              f"{r.get('speedup') or float('nan'):>9.1f}x")


if __name__ == "__main__":
    main()
