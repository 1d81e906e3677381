"""Exact minimum defensive alliance solvers."""

from ._core import (
    AllianceSolution,
    Graph,
    ParseError,
    VerificationFailure,
    brute_force_min_alliance,
    distance_to_clique_set,
    ilp_minimum,
    moore_bound,
    parse_dimacs,
    protection_threshold,
    reduction_k_prime,
    solve_dtc,
    solve_lowdeg,
    solve_twincover,
    twin_cover_set,
    verify_alliance,
    write_dimacs,
)

__all__ = [
    "AllianceSolution",
    "Graph",
    "ParseError",
    "VerificationFailure",
    "brute_force_min_alliance",
    "distance_to_clique_set",
    "ilp_minimum",
    "moore_bound",
    "parse_dimacs",
    "protection_threshold",
    "reduction_k_prime",
    "solve_dtc",
    "solve_lowdeg",
    "solve_twincover",
    "twin_cover_set",
    "verify_alliance",
    "write_dimacs",
]
