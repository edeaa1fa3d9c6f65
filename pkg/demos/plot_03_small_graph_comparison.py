"""
Exact, genetic and random solvers on small graphs
==================================================

Reduced-size rerun of the small-graph comparison: ten G(n, 0.5) graphs per
size, solved by all three algorithms.
"""

from nbc import GaParams, solve_genetic
from nbc import bench
from nbc.instances import random_graph

cfg = bench.BenchConfig(sizes=tuple(range(4, 19, 2)), trials_per_size=10, seed=1)
records = bench.run_benchmark(cfg)
summary = bench.summarize(bench.parse_records(bench.format_records(cfg, records)))

print("size  exact     ga  random")
for n in cfg.sizes:
    row = {s["algorithm"]: s["mean_penalty"] for s in summary if s["size"] == n}
    print(f"{n:4d} {row['exact']:6.1f} {row['ga']:6.1f} {row['random']:7.1f}")

###############################################################################
# Convergence of one GA run on a 20-vertex graph.

g = random_graph(20, 0.5, seed=20)
res = solve_genetic(g, GaParams(seed=3))
for gen, pen in res.trace[:: max(1, len(res.trace) // 10)]:
    print(f"generation {gen:3d}: best penalty {pen}")
print("final:", res.best_penalty)
