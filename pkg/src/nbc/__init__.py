"""Neighborhood balanced colorings: verification, solvers and the PARTITION reduction."""

from .gadgets import (
    PackLayout,
    PartitionInstance,
    ReductionLayout,
    build_npack,
    canonical_npack_coloring,
    coloring_from_partition,
    pack_violations,
    partition_from_coloring,
    reduce_partition,
)
from .graph import Color, Coloring, Graph, PenaltyReport, is_nbc, parity_lower_bound, penalty
from .instances import GenSpec, generate, random_even_graph, random_graph
from .solvers import (
    GaParams,
    SolveResult,
    partition_oracle,
    solve_exact,
    solve_genetic,
    solve_random,
)

__version__ = "0.1.0"
