"""
Genetic algorithm against random coloring on larger graphs
===========================================================

Exhaustive search stops being an option past a few dozen vertices. Here the
GA and a single random coloring are compared up to 250 vertices.
"""

from nbc import bench

cfg = bench.BenchConfig(sizes=(10, 50, 100, 250), trials_per_size=3,
                        algorithms=("ga", "random"), seed=5)
records = bench.run_benchmark(cfg)
print(bench.format_summary(bench.summarize(bench.parse_records(bench.format_records(cfg, records)))))
