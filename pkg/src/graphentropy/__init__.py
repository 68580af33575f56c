"""Topological entropy, Randic indices and BFD-ordered extremal graphs."""
from .graph import (DegreeStats, DisconnectedGraphError, Graph, GraphFormatError,
                    complete_bipartite_graph, complete_graph, cycle_graph, degree_sequence,
                    degree_stats, edge_list_text, generate_er, is_connected,
                    is_connected_realizable, is_graphical, is_tree_sequence, load_edge_list,
                    load_matrix_market, path_graph, read_graph, star_graph, write_edge_list)
from .ordering import (BfdOrdering, InvalidSequenceError, SearchBudgetExceeded, bfd_order_search,
                       bfd_realize, bfd_tree, bfd_verify, forcibly_connected_bondy, majorizes)
from .randic import (AlphaProfile, AlphaStar, AlphaStarBoundaryError, alpha_sweep,
                     edge_measure, edge_vertex_entropies, find_alpha_star,
                     log_normalized_randic, log_randic_derivative, normalized_randic,
                     randic_index, renyi_edge_entropy, tsallis_edge_entropy, vertex_measure)
from .rewire import (ClimbResult, InvalidSwitchError, Switch, SwitchRejected, apply_switch,
                     assortativity_r, delta_randic, maximize_randic)
from .spectral import (ConvergenceError, MarkovChain, SpectralResult, dynamical_entropy,
                       max_entropy_chain, schwarz_constant, schwarz_estimate, spectral_radius,
                       topological_entropy)

__version__ = "0.1.0"
