"""Bohr radii for K-quasiconformal sense-preserving harmonic mappings."""

from .bohr_engine import BohrReport, bohr_sum, bohr_sum_sq0, empirical_bohr_radius
from .mapping_catalog import CatalogEntry, ENTRY_IDS, extremal_pair, make_entry
from .power_series import Series
from .quasiconformal import HarmonicPair, K_from_k, k_from_K
from .radius_solvers import EQUATION_IDS, lhs_eval, solve, solve_K

__all__ = [
    "BohrReport",
    "bohr_sum",
    "bohr_sum_sq0",
    "empirical_bohr_radius",
    "CatalogEntry",
    "ENTRY_IDS",
    "extremal_pair",
    "make_entry",
    "Series",
    "HarmonicPair",
    "K_from_k",
    "k_from_K",
    "EQUATION_IDS",
    "lhs_eval",
    "solve",
    "solve_K",
]
