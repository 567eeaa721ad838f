"""Graded Betti numbers of cycle graphs and standard Young tableaux."""

from ._core import (
    BettiTable,
    CycleBettiError,
    MarkedSubset,
    Tableau,
    VerificationReport,
    betti,
    betti_table,
    count_syt_hook_length,
    cycle_edges,
    duality_check,
    enumerate_syt,
    format_tableau,
    graph_homology_oracle,
    hook_shape,
    linear_strand,
    m_prime,
    m_set,
    marked_subsets,
    parse_tableau,
    phi,
    psi,
    reduced_betti_dim,
    restrict,
    transpose,
    verify_bijection,
)

__all__ = [
    "BettiTable",
    "CycleBettiError",
    "MarkedSubset",
    "Tableau",
    "VerificationReport",
    "betti",
    "betti_table",
    "count_syt_hook_length",
    "cycle_edges",
    "duality_check",
    "enumerate_syt",
    "format_tableau",
    "graph_homology_oracle",
    "hook_shape",
    "linear_strand",
    "m_prime",
    "m_set",
    "marked_subsets",
    "parse_tableau",
    "phi",
    "psi",
    "reduced_betti_dim",
    "restrict",
    "transpose",
    "verify_bijection",
]
