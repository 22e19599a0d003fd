"""Bipartite graph measurement and generation.

Measures degree distributions and butterfly/metamorphosis statistics of
bipartite graphs, and generates synthetic graphs matching them via fast
bipartite Chung-Lu and bipartite BTER.
"""

from .generators import (
    AffinityBlockPlan,
    ExcessDegrees,
    GenerationResult,
    GeneratorConfig,
    bipartite_bter,
    fast_bipartite_cl,
    plan_affinity_blocks,
    sample_index,
)
from .graph import BipartiteGraph, DegreeTarget, GraphConstructionError
from .kernel import active_kernel
from .metrics import (
    BinnedSeries,
    GraphSummary,
    MetamorphosisProfile,
    butterflies_per_edge,
    butterfly_oracle,
    compute_profile,
    count_butterflies,
    count_caterpillars,
    degree_distribution,
    global_metamorphosis,
    log_bin,
    metamorphosis_edge,
    metamorphosis_node,
    metamorphosis_per_degree,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "AffinityBlockPlan",
    "BinnedSeries",
    "BipartiteGraph",
    "DegreeTarget",
    "ExcessDegrees",
    "GenerationResult",
    "GeneratorConfig",
    "GraphConstructionError",
    "GraphSummary",
    "MetamorphosisProfile",
    "active_kernel",
    "bipartite_bter",
    "butterflies_per_edge",
    "butterfly_oracle",
    "compute_profile",
    "count_butterflies",
    "count_caterpillars",
    "degree_distribution",
    "fast_bipartite_cl",
    "global_metamorphosis",
    "log_bin",
    "metamorphosis_edge",
    "metamorphosis_node",
    "metamorphosis_per_degree",
    "plan_affinity_blocks",
    "sample_index",
    "summarize",
]
