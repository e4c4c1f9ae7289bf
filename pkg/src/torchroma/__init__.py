"""Chromatic numbers and verified colourings of the torus triangulations T(r, s, t)."""

from .certificates import Coloring, ColoringError, verify_coloring
from .chroma_oracle import (Classification, NotSimpleError, classify, exceptional_families,
                            four_colorable_by_main, heawood_number, is_three_chromatic,
                            loop_criterion)
from .coloring_engine import (STRATEGIES, NotApplicable, best_coloring, color_by_column_shifts,
                              color_by_reparam_tiling, color_by_vertical_tiling, color_t1s2,
                              color_three_pattern, color_two_columns, color_unshifted,
                              constructive_coloring)
from .lattice_canon import (are_isomorphic, canonical_form, enumerate_order,
                            normal_circuit_lengths, reparameterize)
from .solver import (BudgetExceeded, SolveBudget, SolveResult, Status, chromatic_number_exact,
                     solve_exact)
from .torus_graph import (InvalidParams, LoopError, SimpleGraph, TorusGraph, TorusParams,
                          build_graph, classify_edges, neighbors, underlying_simple_graph)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Classification", "Coloring", "ColoringError", "InvalidParams",
    "LoopError", "NotApplicable", "NotSimpleError", "STRATEGIES", "SimpleGraph",
    "SolveBudget", "SolveResult", "Status", "TorusGraph", "TorusParams", "are_isomorphic",
    "best_coloring", "build_graph", "canonical_form", "chromatic_number_exact", "classify",
    "classify_edges", "color_by_column_shifts", "color_by_reparam_tiling",
    "color_by_vertical_tiling", "color_t1s2", "color_three_pattern", "color_two_columns",
    "color_unshifted", "constructive_coloring", "enumerate_order", "exceptional_families",
    "four_colorable_by_main", "heawood_number", "is_three_chromatic", "loop_criterion",
    "neighbors", "normal_circuit_lengths", "reparameterize", "solve_exact",
    "underlying_simple_graph", "verify_coloring",
]
