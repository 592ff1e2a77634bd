"""Transversal numbers of uniform hypergraphs and certificates for bounds on the Tuza constant."""

from .hypergraph import (Hypergraph, HypergraphError, degree_profile, edges_overlap, is_linear,
                         neighbors, remove_closed, connected_components, validate)
from .transversal import (TransversalResult, LimitExceeded, greedy_transversal, is_transversal,
                          tau_bruteforce, tau_exact)
from .constructions import (block_layout, tuza_instance, proposed_lower_bound, lai_chang_lower_bound,
                            alon_upper_bound, random_uniform_hypergraph)
from .certificates import (WeightScheme, LEMMA7, table2_scheme, generate_constraints, check_scheme,
                           optimize_scheme, weight_of, fuzz_lemma, scheme_monotone_in_k)

__all__ = [
    "Hypergraph", "HypergraphError", "degree_profile", "edges_overlap", "is_linear", "neighbors",
    "remove_closed", "connected_components", "validate",
    "TransversalResult", "LimitExceeded", "greedy_transversal", "is_transversal",
    "tau_bruteforce", "tau_exact",
    "block_layout", "tuza_instance", "proposed_lower_bound", "lai_chang_lower_bound",
    "alon_upper_bound", "random_uniform_hypergraph",
    "WeightScheme", "LEMMA7", "table2_scheme", "generate_constraints", "check_scheme",
    "optimize_scheme", "weight_of", "fuzz_lemma", "scheme_monotone_in_k",
]
