"""Exact counting for walks, CNF-constrained walks, quantifier-free formulas,
coloured-path homomorphisms, parameterised determinants and branching
programs. Counts are returned as Python ints."""

from ._paracount import (
    Error,
    bp_count,
    bp_stagger,
    count_cycle_cover2_cnf,
    count_hom_path_star,
    count_log_reach,
    count_log_reach2_cnf,
    count_log_walk,
    count_mc,
    count_reach,
    count_reach_colour,
    det_cross_check,
    formula_size,
    pdet,
    run_cli,
    selftest,
)

__all__ = [
    "Error",
    "bp_count",
    "bp_stagger",
    "count_cycle_cover2_cnf",
    "count_hom_path_star",
    "count_log_reach",
    "count_log_reach2_cnf",
    "count_log_walk",
    "count_mc",
    "count_reach",
    "count_reach_colour",
    "det_cross_check",
    "formula_size",
    "pdet",
    "run_cli",
    "selftest",
]
