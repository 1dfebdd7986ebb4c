"""
Widdershins spirals, the permutation class W they generate, and the
permutation graphs of W: pattern containment, basis computation, ring
decomposition, induced-subgraph machinery and labelled antichains.
"""

from .perm import (
    contains, direct_sum, format_perm, inverse, parse_perm, reverse_complement,
    rotate90, skew_sum, standardize,
)
from .classes import (
    MembershipOracle, avoids_all, compute_basis, enumerate_class, generalized_subword_leq,
    is_antichain, union_basis,
)
from .widdershins import (
    BASIS_W, BASIS_W_UNION_INVERSE, SpiralSpec, central_insert, gf_coefficients, in_W,
    in_W_union_inverse, in_W_via_basis, ring_compose, ring_decompose, spiral,
)
from .graphs import (
    Graph, canonical_form, catalog, graph_iso, induced_subgraph_iso, perm_graph,
    realizing_permutations,
)
from .labelled import LabelledGraph, antichain_check, labelled_embeds, labelled_path, wk_graph

__version__ = "0.1.0"
