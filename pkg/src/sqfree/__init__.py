"""Square avoidance under forced letters: Rauzy-graph pruning, exact certificates, exhaustive lower bounds."""

from .certificate import (Certificate, CertificateError, alpha, alpha_prime, beta_table,
                          check_main, check_singleton, parse_certificate)
from .prune import PrunedSubgraph, certify_subset, prune_fixed_point, walk_counts
from .rauzy import (GraphMeta, LabeledGraph, build_full_rauzy, build_psi_graph,
                    deserialize_graph, psi, psi_step, serialize_graph)
from .search import SearchBudget, SearchOutcome, count_compatible_squarefree
from .words import (HOLE, Alphabet, PatternSet, PeriodicPartialWord, compatible,
                    extends_square_free, is_square_free, parse_partial, parse_word, render)

__all__ = [
    "Certificate",
    "CertificateError",
    "alpha",
    "alpha_prime",
    "beta_table",
    "check_main",
    "check_singleton",
    "parse_certificate",
    "PrunedSubgraph",
    "certify_subset",
    "prune_fixed_point",
    "walk_counts",
    "GraphMeta",
    "LabeledGraph",
    "build_full_rauzy",
    "build_psi_graph",
    "deserialize_graph",
    "psi",
    "psi_step",
    "serialize_graph",
    "SearchBudget",
    "SearchOutcome",
    "count_compatible_squarefree",
    "HOLE",
    "Alphabet",
    "PatternSet",
    "PeriodicPartialWord",
    "compatible",
    "extends_square_free",
    "is_square_free",
    "parse_partial",
    "parse_word",
    "render",
]

__version__ = "0.1.0"
