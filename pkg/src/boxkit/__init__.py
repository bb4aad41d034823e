"""Interval-order subgraphs of line graphs, interval completions of their
complements, and boxicity of complements of line graphs (including the
Kneser graphs KG(n, 2))."""

from boxkit.catalog import CatalogEntry, enumerate_catalog, family_a, family_b, family_c
from boxkit.completion import (
    Cover,
    boxicity_bruteforce,
    boxicity_co_line,
    boxicity_le_k,
    min_completion,
    minimal_interval_completions,
    restrict_entry,
    verify_cover,
)
from boxkit.graph import Graph, complement, complete_graph, induced_subgraph, kneser_n2, line_graph, max_degree
from boxkit.interval_order import (
    check_chain_property,
    intervals_from_ordering,
    is_interval_order_bruteforce,
    maximal_interval_order_subgraphs_bruteforce,
    next_mandatory_vertices,
    subgraph_from_ordering,
    two_way_branch,
)
from boxkit.kernels import BACKEND
from boxkit.kneser import counting_check, deltas_disjoint, kneser_boxicity, refute_cover, upper_bound_cover

__version__ = "0.1.0"
