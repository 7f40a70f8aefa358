"""Upper-critical (complete multipartite) graphs: construction,
recognition, transforms, counting, enumeration, and an exhaustive
property-verification harness."""

from .graph import Graph, canonical_form, is_isomorphic, join
from .coloring import (ColorPartition, chromatic_number, chromatic_partition,
                       enumerate_proper_partitions, is_collapse,
                       is_critical_edge, is_critical_vertex,
                       is_uniquely_colorable, quotient)
from .upper_critical import (PartitionSignature, construct,
                             is_upper_critical_def,
                             neighborhood_structure_holds, recognize,
                             saturate_from_coloring)
from .transforms import (MoveRecord, SpacePoint, TransformKind,
                         add_complete_vertex, add_copy,
                         add_edge_with_conditions, contract_edge,
                         critical_sequence_search, delete_vertex,
                         identify_vertices, predict_move)
from .enumeration import (count_partitions, emit_table,
                          enumerate_upper_critical, partitions_of,
                          table_cells)
from .formats import (decode_graph6, encode_graph6, format_signature,
                      parse_edgelist, parse_graph, parse_partition,
                      parse_signature, serialize_edgelist)
from .verifier import (TheoremId, TheoremReport, VerifyBound, Witness,
                       enumerate_graphs, run_self_test, verify_all,
                       verify_theorem)

__version__ = "0.1.0"

__all__ = [
    "Graph", "join", "canonical_form", "is_isomorphic",
    "ColorPartition", "chromatic_number", "chromatic_partition",
    "enumerate_proper_partitions", "is_uniquely_colorable", "quotient",
    "is_collapse", "is_critical_vertex", "is_critical_edge",
    "PartitionSignature", "is_upper_critical_def", "recognize", "construct",
    "saturate_from_coloring", "neighborhood_structure_holds",
    "SpacePoint", "TransformKind", "MoveRecord", "delete_vertex",
    "identify_vertices", "contract_edge", "add_copy", "add_complete_vertex",
    "add_edge_with_conditions", "critical_sequence_search", "predict_move",
    "count_partitions", "partitions_of", "enumerate_upper_critical",
    "emit_table", "table_cells",
    "TheoremId", "TheoremReport", "VerifyBound", "Witness",
    "enumerate_graphs", "verify_theorem", "verify_all", "run_self_test",
    "encode_graph6", "decode_graph6", "parse_edgelist", "serialize_edgelist",
    "parse_graph", "parse_signature", "format_signature", "parse_partition",
]
