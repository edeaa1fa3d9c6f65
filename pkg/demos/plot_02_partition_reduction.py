"""
From PARTITION to balanced colorings
=====================================

Each item a of S becomes an a-pack; two connector vertices of a K_{2,2}
are joined to every numeric vertex. An equal-sum split of S colors the
result with penalty 0.
"""

from nbc import (
    coloring_from_partition,
    partition_from_coloring,
    partition_oracle,
    penalty,
    reduce_partition,
    solve_exact,
)
from nbc.gadgets import UnequalSplitError

items = (1, 4, 3)
g, layout = reduce_partition(items)
print(f"S = {items}: {g.n} vertices, {g.m} edges")

split = partition_oracle(items)
print("equal-sum split (item indices):", split)

c = coloring_from_partition(layout, split)
print("penalty of the constructed coloring:", penalty(g, c).total)
print("decoded back:", partition_from_coloring(layout, c))

###############################################################################
# The bottom vertices u1, u2 only touch v1 and v2, so their colors are
# free. If both are red, v1 balances against numerics whose sums differ by
# two, and S = {1, 3} gets a balanced coloring with no equal split.

items = (1, 3)
g, layout = reduce_partition(items)
res = solve_exact(g)
print(f"S = {items}: oracle -> {partition_oracle(items)}, exact penalty -> {res.best_penalty}")
try:
    partition_from_coloring(layout, res.best, g)
except UnequalSplitError as exc:
    print("decoding refused:", exc)

###############################################################################
# Two extra vertices joined to u1 and u2 force them apart.

g, layout = reduce_partition(items, anchored=True)
print(f"anchored S = {items}: exact penalty -> {solve_exact(g).best_penalty}")
