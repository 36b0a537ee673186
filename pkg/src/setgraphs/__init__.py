"""Exact combinatorics of subset intersection graphs.

The graph G(n) has one vertex per non-empty subset of an n-element ground
set, with edges between intersecting subsets. This package computes its
invariants along independent routes (closed forms, recursions, brute force)
and ships a harness that adjudicates a registry of claims about them.
"""

from .config import CANONICAL_ORDER_TAG, DEFAULT_CAPS, CapExceeded, Caps
from .core import (
    ExtensionMap,
    MaterializedGraph,
    VertexLabel,
    adjacent,
    canonical_index,
    canonical_masks,
    edges_by_mask,
    elements_of_mask,
    extension_map,
    full_mask,
    label_of_mask,
    mask_of_elements,
    mask_of_label,
    materialize,
    subset_str,
    vertex_count,
)
from .holes import (
    HoleReport,
    apex_primitive_degree,
    h_complete,
    hole_report,
    primitive_degree,
    primitive_degrees,
    triangle_count_claimed,
    triangle_count_corrected,
    triangle_count_exact,
)
from .invariants import (
    DegreeProfile,
    TightnessVector,
    characteristic,
    degree_brute,
    degree_closed,
    degree_extremes,
    degree_inclusion_exclusion,
    degree_profile,
    edge_count_brute,
    edge_count_closed,
    edge_count_recursive,
    tightness,
    tightness_checksum,
    tightness_recursion_step,
    tightness_vector,
)
from .mela import check_closure, check_divisibility, is_mela, mela
from .oracle import (
    SmallGraph,
    chromatic_exact,
    dominating_exact,
    enum_triangles,
    max_cliques_exact,
    mis_exact,
    vertex_cover_exact,
)
from .parameters import (
    CliqueSet,
    Coloring,
    ExplosionState,
    bondage_number,
    chromatic_coloring,
    chromatic_number,
    clique_number,
    clique_witness,
    disjointness_graph,
    domination,
    independence_number,
    max_cliques,
    mcpherson_number,
    simulate_explosions,
    single_edge_bondage,
)
from .verdicts import CONFIRMED, REFUTED, SKIPPED, ClaimVerdict
from .verify import ALL_CLAIM_IDS, REGISTRY, Claim, render_report, run_claims

__version__ = "0.1.0"

__all__ = [
    "ALL_CLAIM_IDS",
    "CANONICAL_ORDER_TAG",
    "CONFIRMED",
    "CapExceeded",
    "Caps",
    "Claim",
    "ClaimVerdict",
    "CliqueSet",
    "Coloring",
    "DEFAULT_CAPS",
    "DegreeProfile",
    "ExplosionState",
    "ExtensionMap",
    "HoleReport",
    "MaterializedGraph",
    "REFUTED",
    "REGISTRY",
    "SKIPPED",
    "SmallGraph",
    "TightnessVector",
    "VertexLabel",
    "adjacent",
    "apex_primitive_degree",
    "bondage_number",
    "canonical_index",
    "canonical_masks",
    "characteristic",
    "check_closure",
    "check_divisibility",
    "chromatic_coloring",
    "chromatic_exact",
    "chromatic_number",
    "clique_number",
    "clique_witness",
    "degree_brute",
    "degree_closed",
    "degree_extremes",
    "degree_inclusion_exclusion",
    "degree_profile",
    "disjointness_graph",
    "dominating_exact",
    "domination",
    "edge_count_brute",
    "edge_count_closed",
    "edge_count_recursive",
    "edges_by_mask",
    "elements_of_mask",
    "enum_triangles",
    "extension_map",
    "full_mask",
    "h_complete",
    "hole_report",
    "independence_number",
    "is_mela",
    "label_of_mask",
    "mask_of_elements",
    "mask_of_label",
    "materialize",
    "max_cliques",
    "max_cliques_exact",
    "mcpherson_number",
    "mela",
    "mis_exact",
    "primitive_degree",
    "primitive_degrees",
    "render_report",
    "run_claims",
    "simulate_explosions",
    "single_edge_bondage",
    "subset_str",
    "tightness",
    "tightness_checksum",
    "tightness_recursion_step",
    "tightness_vector",
    "triangle_count_claimed",
    "triangle_count_corrected",
    "triangle_count_exact",
    "vertex_count",
    "vertex_cover_exact",
]
