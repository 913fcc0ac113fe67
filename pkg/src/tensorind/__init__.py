"""Exact independence ratios of tensor (categorical) graph products."""

from .bounds import (
    AClassification,
    SpectralBound,
    chi_f_vertex_transitive,
    classify_A,
    spectral_lambda,
    tardif_quarter_check,
    theorem3_equivalence_check,
)
from .errors import (
    DomainError,
    EdgeListError,
    Graph6Error,
    InvariantViolation,
    ParameterError,
    SamplingError,
    SizeGuardError,
    TensorIndError,
)
from .graph import (
    Graph,
    VertexSet,
    canonical_form,
    circular,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    generate,
    is_isomorphic,
    is_vertex_transitive,
    kneser,
    neighborhood,
    path,
    petersen,
    star,
    tensor_power,
    tensor_product,
)
from .graph_io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, read_graphs
from .independence import (
    ExpansionWitness,
    a_star,
    chromatic_number,
    clique_number,
    expansion_max,
    expansion_ratio,
    independence_number,
    independence_ratio,
    max_independent_set,
)
from .matching import FpmCertificate, HallViolator, decide_A_one, fpm_certificate, has_fpm
from .powers import PowerWitness, union_power_decomposition, witness_first_coordinate, witness_majority

__version__ = "0.1.0"

__all__ = [
    "AClassification",
    "DomainError",
    "EdgeListError",
    "ExpansionWitness",
    "FpmCertificate",
    "Graph",
    "Graph6Error",
    "HallViolator",
    "InvariantViolation",
    "ParameterError",
    "PowerWitness",
    "SamplingError",
    "SizeGuardError",
    "SpectralBound",
    "TensorIndError",
    "VertexSet",
    "a_star",
    "canonical_form",
    "chi_f_vertex_transitive",
    "chromatic_number",
    "circular",
    "classify_A",
    "clique_number",
    "complete",
    "complete_bipartite",
    "cycle",
    "decide_A_one",
    "disjoint_union",
    "emit_edge_list",
    "emit_graph6",
    "expansion_max",
    "expansion_ratio",
    "fpm_certificate",
    "generate",
    "has_fpm",
    "independence_number",
    "independence_ratio",
    "is_isomorphic",
    "is_vertex_transitive",
    "kneser",
    "max_independent_set",
    "neighborhood",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "petersen",
    "read_graphs",
    "spectral_lambda",
    "star",
    "tardif_quarter_check",
    "tensor_power",
    "tensor_product",
    "theorem3_equivalence_check",
    "union_power_decomposition",
    "witness_first_coordinate",
    "witness_majority",
]
