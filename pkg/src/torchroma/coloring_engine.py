"""Constructive colourings of T(r, s, t) and the strategy cascade.

Every strategy returns a :class:`Coloring` that has already passed
``verify_coloring``. Strategies work on the representation they are
handed; :func:`best_coloring` tries each one on every lattice image of
the input and carries the result back through the vertex map.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .certificates import Coloring, ColoringError, certified, verify_coloring
from .chroma_oracle import _three_congruence, classify
from .lattice_canon import image_maps, normal_circuit_lengths, vertex_map
from .solver import BudgetExceeded, SolveBudget, Status, solve_exact
from .torus_graph import (LoopError, TorusParams, as_params, build_graph,
                          has_loops)
from .unshifted import columns_by_shifts, construct_unshifted

__all__ = [
    "Coloring", "verify_coloring", "NotApplicable", "color_three_pattern",
    "color_two_columns", "color_t1s2", "color_unshifted", "color_by_vertical_tiling",
    "color_by_reparam_tiling", "color_by_column_shifts", "best_coloring", "STRATEGIES",
]

log = logging.getLogger(__name__)


class NotApplicable(ValueError):
    """The strategy's precondition does not hold for these parameters."""


def _require_loop_free(p: TorusParams) -> None:
    if has_loops(p):
        raise LoopError(f"{p} has loops")


def color_three_pattern(p) -> Coloring:
    """colour(i, j) = ((j - i) mod 3) + 1."""
    p = as_params(p)
    _require_loop_free(p)
    if not _three_congruence(p):
        raise NotApplicable(f"{p} fails s = 0 = r - t (mod 3)")
    i = np.repeat(np.arange(1, p.r + 1), p.s)
    j = np.tile(np.arange(1, p.s + 1), p.r)
    return certified(build_graph(p), (j - i) % 3 + 1, "three-pattern")


def color_two_columns(p) -> Coloring:
    """Columns 1 and 2 alternate {1, 2} and {3, 4}; needs r = 2 and s even."""
    p = as_params(p)
    if p.r != 2 or p.s % 2:
        raise NotApplicable(f"{p} is not T(2, even, t)")
    j = np.arange(p.s) % 2
    return certified(build_graph(p), np.concatenate([j + 1, j + 3]), "two-column")


def t1s2_sequence(s: int) -> np.ndarray:
    if s < 7:
        raise ValueError("the T(1, s, 2) patterns need s >= 7")
    if s % 4 == 0:
        return np.tile(np.arange(1, 5), s // 4)
    if s == 11:
        return np.array([1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6])
    if s == 7:
        return np.arange(1, 8)
    v = s % 4
    u = (s - 5 * v) // 4
    return np.concatenate([np.tile(np.arange(1, 5), u), np.tile(np.arange(1, 6), v)])


def color_t1s2(s: int) -> Coloring:
    """Sequence colouring of T(1, s, 2): any four consecutive vertices differ."""
    seq = t1s2_sequence(s)
    return certified(build_graph((1, s, 2)), seq, "t1s2")


def _t1s2_params(p: TorusParams) -> Coloring:
    if p.r != 1 or p.t != 2 or p.s < 7:
        raise NotApplicable(f"{p} is not T(1, s, 2) with s >= 7")
    return color_t1s2(p.s)


def color_unshifted(p: int, q: int, budget: Optional[SolveBudget] = None,
                    allow_solver: bool = True) -> Coloring:
    """Proper 4-colouring of T(p, q, 0) for p, q >= 3."""
    if p < 3 or q < 3:
        raise NotApplicable(f"T({p},{q},0) needs p, q >= 3")
    g = build_graph((p, q, 0))
    colors = construct_unshifted(p, q)
    if colors is not None:
        return certified(g, colors, "unshifted-bands")
    if not allow_solver:
        raise ColoringError(f"no band construction for T({p},{q},0)")
    log.info("band construction failed for T(%d,%d,0); using the exact solver", p, q)
    res = solve_exact(g, 4, budget)
    if res.status is Status.FOUND:
        return certified(g, res.coloring.colors, "unshifted-solver")
    if res.status is Status.BUDGET_EXCEEDED:
        raise BudgetExceeded(f"no 4-colouring of T({p},{q},0) within budget")
    raise ColoringError(f"T({p},{q},0) is not 4-colourable")


def _tile(p: TorusParams, block: Coloring, strategy: str) -> Coloring:
    m = block.params.s
    rows = np.arange(p.s) % m
    grid = block.grid()[:, rows]
    tag = strategy if "solver" not in block.strategy else strategy + "/solver-block"
    return certified(build_graph(p), grid.reshape(-1), tag)


def color_by_vertical_tiling(p, budget: Optional[SolveBudget] = None,
                             allow_solver: bool = True) -> Coloring:
    """Repeat a colouring of T(r, gcd(s, t), 0) down the s rows.

    The block is periodic with period gcd(s, t), so the shift by t across
    the column seam sees the same colours as no shift at all.
    """
    p = as_params(p)
    m = gcd(p.s, p.t)
    if p.r < 3 or m < 3:
        raise NotApplicable(f"{p}: need r >= 3 and gcd(s, t) >= 3")
    block = color_unshifted(p.r, m, budget, allow_solver)
    return _tile(p, block, "vertical-tiling")


def _pull_back(p: TorusParams, q: TorusParams, g, cq: Coloring, strategy: str) -> Coloring:
    colors = cq.colors[vertex_map(p, q, g)]
    return certified(build_graph(p), colors, strategy)


def color_by_reparam_tiling(p, budget: Optional[SolveBudget] = None,
                            allow_solver: bool = True) -> Coloring:
    """View the graph as T(n/c, c, t') with gcd(c, t') = n/b and tile vertically."""
    p = as_params(p)
    n = p.n
    lengths = normal_circuit_lengths(p)
    rows, cols = n // lengths.b, n // lengths.c
    if not (cols >= rows >= 3):
        raise NotApplicable(f"{p}: need n/c >= n/b >= 3, got {cols}, {rows}")
    for q, g in image_maps(p):
        if q.s == lengths.c and q.r == cols and gcd(q.s, q.t) == rows:
            cq = color_by_vertical_tiling(q, budget, allow_solver)
            tag = cq.strategy.replace("vertical-tiling", "reparam-tiling")
            return _pull_back(p, q, g, cq, tag)
    raise ColoringError(f"no representation T(n/c, c, t') of {p} with gcd(c, t') = n/b")


def _column_shift_layout(base: np.ndarray, shifts: int, step: int) -> np.ndarray:
    first = base[0]
    # step -1: column 1 moved up one row per column; step 2: down two rows
    extra = [np.roll(first, -step * k) for k in range(shifts)]
    return np.concatenate([base, np.array(extra, dtype=base.dtype).reshape(shifts, base.shape[1])])


def color_by_column_shifts(p) -> Coloring:
    """Colour y columns from an unshifted grid, then copy column 1 with shifts.

    Upward shifts by one row need y = r - t; downward shifts by two rows
    need 2m = -t (mod s) further columns, y = r - m.
    """
    p = as_params(p)
    r, s, t = p.as_tuple()
    if r < 3 or s < 3 or r == 5 or s == 5:
        raise NotApplicable(f"{p}: need r, s >= 3 and r, s != 5")
    up = r >= t + 3
    down = r > s - (t + 1) // 2
    if not (up or down):
        raise NotApplicable(f"{p}: need r >= t + 3 or r > s - ceil(t/2)")
    g = build_graph(p)
    layouts = []
    if up:
        layouts.append((r - t, t, -1))
    if down:
        m = next((m for m in range(s) if (2 * m + t) % s == 0), None)
        if m is not None and r - m >= 3:
            layouts.append((r - m, m, 2))
    for y, shifts, step in layouts:
        base = columns_by_shifts(y, s, distance_two=True)
        if base is None:
            continue
        try:
            return certified(g, _column_shift_layout(base, shifts, step).reshape(-1),
                             "column-shifts")
        except ColoringError:
            continue
    raise ColoringError(f"column-shift construction failed for {p}")


def _exact(p: TorusParams, k: int, budget: Optional[SolveBudget]) -> Coloring:
    res = solve_exact(build_graph(p), k, budget)
    if res.status is Status.BUDGET_EXCEEDED:
        raise BudgetExceeded(f"budget exhausted searching a {k}-colouring of {p}")
    if res.status is Status.PROVEN_NONE:
        raise AssertionError(f"{p} has no {k}-colouring, contradicting its classification")
    return res.coloring


def _per_representation(fn: Callable) -> Callable:
    def run(p, budget, allow_solver):
        return fn(p)
    return run


def _with_budget(fn: Callable) -> Callable:
    def run(p, budget, allow_solver):
        return fn(p, budget, allow_solver)
    return run


# tried on the input and then on each lattice image, in this order
CONSTRUCTIVE: Tuple[Tuple[str, Callable], ...] = (
    ("three-pattern", _per_representation(color_three_pattern)),
    ("two-column", _per_representation(color_two_columns)),
    ("t1s2", _per_representation(_t1s2_params)),
    ("vertical-tiling", _with_budget(color_by_vertical_tiling)),
    ("reparam-tiling", _with_budget(color_by_reparam_tiling)),
    ("column-shifts", _per_representation(color_by_column_shifts)),
)


def _representations(p: TorusParams):
    yield p, None
    seen = {p}
    for q, g in image_maps(p):
        if q not in seen:
            seen.add(q)
            yield q, g


def constructive_coloring(p, max_colors: int, budget: Optional[SolveBudget] = None,
                          allow_solver: bool = True,
                          only: Optional[str] = None) -> Optional[Coloring]:
    """First verified colouring with at most ``max_colors`` colours, or None."""
    p = as_params(p)
    for name, run in CONSTRUCTIVE:
        if only is not None and name != only:
            continue
        for q, g in _representations(p):
            try:
                cq = run(q, budget, allow_solver)
            except (NotApplicable, ColoringError, LoopError):
                continue
            if cq.k > max_colors:
                continue
            if g is None:
                return cq
            return _pull_back(p, q, g, cq, cq.strategy)
    return None


def best_coloring(p, budget: Optional[SolveBudget] = None) -> Tuple[int, Coloring]:
    """Optimal colouring certificate: ``k`` from the classification, colours from the cascade."""
    p = as_params(p)
    verdict = classify(p)
    if verdict.chi is None:
        raise LoopError(f"{p} has loops; no proper colouring exists")
    k = verdict.chi
    c = constructive_coloring(p, k, budget)
    if c is None:
        c = _exact(p, k, budget)
    if c.k != k:
        raise AssertionError(f"{p}: certificate uses {c.k} colours, classification says {k}")
    return k, c


def _solver_strategy(p, budget=None) -> Coloring:
    p = as_params(p)
    verdict = classify(p)
    if verdict.chi is None:
        raise LoopError(f"{p} has loops")
    return _exact(p, verdict.chi, budget)


STRATEGIES: Dict[str, Callable] = {name: run for name, run in CONSTRUCTIVE}
STRATEGIES["exact-solver"] = lambda p, budget, allow_solver: _solver_strategy(p, budget)
