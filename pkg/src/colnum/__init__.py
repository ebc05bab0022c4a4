"""Generalized coloring numbers of graphs under vertex orderings.

Core objects: weakly/strongly r-reachable sets and the derived statistics
wcol_r, scol_r and adm_r; exact minimization over all orderings at desk
scale; the collecting algorithm that turns per-radius witness orderings
into one ordering good for every radius at once; and a counterexample
family showing that no single ordering can be near-optimal for two
distances simultaneously.
"""

from .exact import (
    CapExceededError,
    ExactResult,
    degeneracy_ordering,
    exact_min,
    treedepth_oracle,
    treewidth_oracle,
)
from .graph import (
    Graph,
    GraphError,
    Ordering,
    parse_graph,
    parse_ordering,
    serialize_graph,
    serialize_ordering,
)
from .reach import (
    ADM,
    INFINITY,
    STRONG,
    WEAK,
    ReachReport,
    adm_of_ordering,
    back_connectivity,
    reach_report,
    scol_of_ordering,
    strongly_reachable_set,
    wcol_of_ordering,
    weakly_reachable_set,
)
from .uniform import (
    Layer,
    UniformInstance,
    UniformReport,
    collect_ordering,
    run_instance,
    uniform_multi,
    uniform_single,
    uniform_single_eps,
)

__version__ = "0.1.0"

__all__ = [
    "ADM",
    "CapExceededError",
    "ExactResult",
    "Graph",
    "GraphError",
    "INFINITY",
    "Layer",
    "Ordering",
    "ReachReport",
    "STRONG",
    "UniformInstance",
    "UniformReport",
    "WEAK",
    "adm_of_ordering",
    "back_connectivity",
    "collect_ordering",
    "degeneracy_ordering",
    "exact_min",
    "parse_graph",
    "parse_ordering",
    "reach_report",
    "run_instance",
    "scol_of_ordering",
    "serialize_graph",
    "serialize_ordering",
    "strongly_reachable_set",
    "treedepth_oracle",
    "treewidth_oracle",
    "uniform_multi",
    "uniform_single",
    "uniform_single_eps",
    "wcol_of_ordering",
    "weakly_reachable_set",
]
