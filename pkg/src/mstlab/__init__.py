"""Desk-scale laboratory for the expected minimum spanning tree length of
the complete graph with i.i.d. random edge weights: exact rational values,
the 1/n and n^{-4/3} expansion constants, and window-scaling simulation."""

from .constants import (ConstantsReport, QuadResult, big_F, c1, c2a, c2b, c2c,
                        c2c_integral, c2_total, f_of_lambda,
                        gaussian_identity_residual, lambda_integral,
                        pil_summand, quadrature)
from .exact_engine import (ExactExpectation, a_term, b_term,
                           exact_expected_mst, expected_component_count,
                           tree_part_float, unicyclic_part_float,
                           unicyclic_series)
from .excursion import (MomentTable, WrightTable, excursion_density_approx,
                        excursion_moments, psi, psi2, wright_table)
from .graph_counts import (CountTable, build_count_table, cayley_trees,
                           renyi_unicyclic, wright_from_counts)
from .mc_sim import (CensusRecord, MCEstimate, brute_force_expected_components,
                     coupled_exp_uniform_diff, estimate_mean_mst,
                     gnp_component_census, mst_edge_set, mst_length)

__version__ = "0.1.0"

__all__ = [
    "ConstantsReport", "QuadResult", "big_F", "c1", "c2a", "c2b", "c2c",
    "c2c_integral", "c2_total", "f_of_lambda", "gaussian_identity_residual",
    "lambda_integral", "pil_summand", "quadrature",
    "ExactExpectation", "a_term", "b_term", "exact_expected_mst",
    "expected_component_count", "tree_part_float", "unicyclic_part_float",
    "unicyclic_series",
    "MomentTable", "WrightTable", "excursion_density_approx",
    "excursion_moments", "psi", "psi2", "wright_table",
    "CountTable", "build_count_table", "cayley_trees", "renyi_unicyclic",
    "wright_from_counts",
    "CensusRecord", "MCEstimate", "brute_force_expected_components",
    "coupled_exp_uniform_diff", "estimate_mean_mst", "gnp_component_census",
    "mst_edge_set", "mst_length",
]
