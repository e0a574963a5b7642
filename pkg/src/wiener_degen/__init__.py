"""Wiener index bounds for maximal k-degenerate graphs and k-trees."""

from .bounds import (BoundsReport, bounds_report, floor_formula, lower_bound, sequence,
                     status_bound, upper_bound_closed, upper_bound_sum)
from .canonical import CanonicalForm, canonical_form, canonical_graph, is_isomorphic
from .constructions import (ConstructionTrace, construct_k_tree, construct_maximal_k_degenerate,
                            join, named_graph, power_of_path)
from .enumeration import (EnumerationConfig, EnumerationSummary, enumerate_k_trees,
                          enumerate_maximal_k_degenerate, extremal_census)
from .formats import from_graph6, read_edge_list, to_graph6, write_edge_list
from .graph import (DistanceSummary, Graph, distances, from_edge_list,
                    is_isometric_after_deletion, wiener)
from .recognition import (classify_2tree_diam2, degeneracy, is_chordal, is_k_tree,
                          is_maximal_k_degenerate)

__version__ = "0.1.0"
