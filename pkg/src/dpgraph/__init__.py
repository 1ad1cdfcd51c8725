"""Distance-preserving graphs: isometric subgraphs, exact dp decision and structural criteria."""

from .formats import parse_edge_list, parse_graph6, read_graph, to_dot, to_edge_list, to_graph6
from .graph import (DisconnectedGraphError, Graph, GraphError, VertexSet, cartesian_product,
                    complete_graph, cycle_graph, empty_graph, from_edge_list, induced_subgraph,
                    lexicographic_product, path_graph, pendant_c5_graph, petersen_graph, star_graph)
from .isometry import (DpReport, IsometryResult, SequentialOrdering,
                       find_isometric_subgraph_of_order, is_dp, is_isometric_subgraph,
                       is_sequentially_dp, isometric_transitivity_check)
from .metrics import (ACYCLIC, UNREACHABLE, BlockDecomposition, DistanceMatrix,
                      all_pairs_distances, bfs_distances, block_decomposition, girth, is_connected,
                      vertex_in_cycle)
from .structure import (EliminationOrdering, has_long_induced_cycle, is_chordal, is_simplicial,
                        maximum_cardinality_search, min_degree, verify_elimination_ordering)
from .theorems import (TheoremDiagnostics, cross_validate_corollary1, cross_validate_lemma1,
                       cross_validate_theorem2, cross_validate_theorem3, lemma1_applicable,
                       theorem2_applicable, theorem3_predicts_not_dp)

__version__ = "0.1.0"
