"""Finite group presentations from group actions on graphs.

The pipeline takes a finite simple graph with an edge-preserving action of a
finite group, chooses a regular scaffolding (orbit representatives, coset
transversals, carrier elements), emits the edge / out-and-back / loop / tree
relation families over the supplied vertex-stabilizer presentations, and
verifies the result independently: coset enumeration must give the group
order and rebuilding the graph from the presented group must reproduce it.
"""

from .coset import CosetTable, EnumerationLimitError, todd_coxeter
from .coxeter import (build_coxeter_context, coxeter_implication_check,
                      face_boundary_check, greedy_disc_ordering,
                      milnor_product_check, path_product)
from .derive import (DerivationInput, DerivedPresentation, StabilizerData,
                     auto_derivation_input, close_pseudo_loops,
                     coxeter_substitution, derive_presentation,
                     presentation_matches, validate_input)
from .dot import cayley_underlying_graph, export_cayley_dot, export_graph_dot, graph_isomorphic
from .golden import GoldenNum, GoldenQuat, golden_sqrt, quat_from_rotation, quat_mul
from .graphs import (ActionedGraph, Graph, OrientedEdge, edge_orbit_involution,
                     find_inversion, validate_action, vertex_orbits)
from .perms import FiniteGroupTable, Perm, generate_closure, left_cosets, perm_compose
from .scaffold import (Scaffolding, build_regular_scaffolding, build_spanning_tree,
                       scaffolding_to_json, validate_regularity)
from .verify import (abelianization_smith, build_kozsul_model,
                     check_covering_isomorphism, presentation_order_check,
                     smith_normal_form)
from .words import (Presentation, Word, edge_loop_relation, edge_relation,
                    evaluate_word_in_G, loop_relation, rewrite_word_to_E1,
                    tautological_relation, trace_path)

__version__ = "0.1.0"
