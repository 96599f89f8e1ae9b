"""Exact independence polynomials ``I(G;x)`` and the alternating number ``I(G;-1)``."""
from __future__ import annotations

from .analysis import (
    GraphProfile,
    corona_decompose,
    cyclomatic_number,
    girth,
    is_very_well_covered,
    is_well_covered,
    maximal_stable_sets,
    profile,
)
from .engine import (
    ComputationStats,
    Strategy,
    alternating_number,
    brute_force_poly,
    independence_poly,
    poly,
    stability_number,
)
from .familyspec import FamilySpec, build_family, parse_family_spec
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import Graph, GraphError, GraphTooLargeError
from .kernels import BACKEND
from .poly import Polynomial
from .search import SearchResult, coverage_table, search
from .verify import SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ComputationStats",
    "FamilySpec",
    "Graph",
    "GraphError",
    "GraphProfile",
    "GraphTooLargeError",
    "Polynomial",
    "SearchResult",
    "Strategy",
    "SuiteReport",
    "alternating_number",
    "brute_force_poly",
    "build_family",
    "corona_decompose",
    "coverage_table",
    "cyclomatic_number",
    "girth",
    "independence_poly",
    "is_very_well_covered",
    "is_well_covered",
    "maximal_stable_sets",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "poly",
    "profile",
    "run_suite",
    "search",
    "stability_number",
    "write_edge_list",
    "write_graph6",
]
