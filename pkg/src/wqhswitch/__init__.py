"""Cospectral non-geometric strongly regular graphs from Denniston arcs via WQH switching."""

from .analysis import (
    GeometricityReport,
    NotSrg,
    Spectrum,
    SrgParams,
    char_poly_mod,
    corollary_params,
    geometricity_report,
    proposition_witness,
    srg_check,
    srg_spectrum,
    srg_to_geometry_params,
)
from .arcs import Arc, denniston_arc, load_arc, verify_maximal_arc
from .cliques import max_clique_through_edge
from .explore import explore, find_generic_partitions, fingerprint
from .gf2h import Field, find_irreducible_lambda
from .graphcore import Graph, graph6_decode, graph6_encode
from .linrep import LineSet, build_line_graph, build_line_set
from .switching import (
    PartitionSpec,
    SwitchingConfig,
    apply_switch,
    build_partition,
    find_switching_config,
    verify_wqh_hypotheses,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "Field",
    "GeometricityReport",
    "Graph",
    "LineSet",
    "NotSrg",
    "PartitionSpec",
    "Spectrum",
    "SrgParams",
    "SwitchingConfig",
    "apply_switch",
    "build_line_graph",
    "build_line_set",
    "build_partition",
    "char_poly_mod",
    "corollary_params",
    "denniston_arc",
    "explore",
    "find_generic_partitions",
    "find_irreducible_lambda",
    "find_switching_config",
    "fingerprint",
    "geometricity_report",
    "graph6_decode",
    "graph6_encode",
    "load_arc",
    "max_clique_through_edge",
    "proposition_witness",
    "srg_check",
    "srg_spectrum",
    "srg_to_geometry_params",
    "verify_maximal_arc",
    "verify_wqh_hypotheses",
]
