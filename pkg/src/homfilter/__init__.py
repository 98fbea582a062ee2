"""Exact homomorphism counting, quantum-graph filters and motif-parameter reductions."""

from .cfi import ChargeFunction, CfiGraph, cfi_csp, cfi_filter, deleted_class_isomorphism, even_assignments, push_along_path, push_incident
from .counting import MotifOracle, hom_count, ind_count, inj_count, make_oracle, sub_count
from .expansion import HomExpansion, ind_hom_expansion, matching_quotient_embed, quotients, sub_hom_expansion
from .filters import ColorCoarsening, apply_filters, cardinality_filter, inclusion_exclusion_filter, looped_template
from .graph import (
    ColoredGraph,
    apply_coloring,
    automorphism_count,
    connected_components,
    edge_color_classes,
    elementary_wall,
    is_isomorphic,
    is_surjectively_colored,
    strip_colors,
)
from .quantum import QuantumGraph, collect, evaluate_linear, tensor, tensor_quantum
from .reduction import PromiseViolation, ReductionCase, ReductionReport, lift_colored, lift_expansion, minor_lift, pad_host, reduce_hom

__version__ = "0.1.0"

__all__ = [
    "ChargeFunction", "CfiGraph", "cfi_csp", "cfi_filter", "deleted_class_isomorphism", "even_assignments",
    "push_along_path", "push_incident", "MotifOracle", "hom_count", "ind_count", "inj_count", "make_oracle",
    "sub_count", "HomExpansion", "ind_hom_expansion", "matching_quotient_embed", "quotients", "sub_hom_expansion",
    "ColorCoarsening", "apply_filters", "cardinality_filter", "inclusion_exclusion_filter", "looped_template",
    "ColoredGraph", "apply_coloring", "automorphism_count", "connected_components", "edge_color_classes",
    "elementary_wall", "is_isomorphic", "is_surjectively_colored", "strip_colors", "QuantumGraph", "collect",
    "evaluate_linear", "tensor", "tensor_quantum", "PromiseViolation", "ReductionCase", "ReductionReport",
    "lift_colored", "lift_expansion", "minor_lift", "pad_host", "reduce_hom",
]
