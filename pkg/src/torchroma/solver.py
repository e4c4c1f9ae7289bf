"""Exact k-colourability by complete DSATUR backtracking."""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from ._accel import HAVE_NUMBA
from .certificates import Coloring, certified
from .torus_graph import as_simple

DEFAULT_NODE_LIMIT = 200_000_000
DEFAULT_TIME_LIMIT = 300.0
_CHUNK = 2_000_000 if HAVE_NUMBA else 20_000


class BudgetExceeded(RuntimeError):
    """The search hit its node or time limit before deciding."""


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")

    @classmethod
    def default(cls) -> "SolveBudget":
        nodes = os.environ.get("TORCHROMA_BUDGET_NODES")
        return cls(node_limit=int(nodes)) if nodes else cls()


class Status(enum.Enum):
    FOUND = "found"
    PROVEN_NONE = "proven-none"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    coloring: Optional[Coloring] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def solve_exact(g, k: int, budget: Optional[SolveBudget] = None) -> SolveResult:
    """Find a proper ``k``-colouring of ``g`` or prove there is none.

    The underlying simple graph is searched; vertex 0 gets colour 1 and a
    new colour is only ever introduced as ``max used + 1``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    sg = as_simple(g)
    budget = budget or SolveBudget.default()
    state = kernels.new_search_state(sg.n, k)
    colors = state[0]
    deadline = time.monotonic() + budget.time_limit
    nodes = 0
    while True:
        chunk = min(_CHUNK, budget.node_limit - nodes)
        status = kernels.dsatur_search(sg.nbr, sg.deg, k, *state, chunk)
        nodes = int(state[-1][1])
        if status == kernels.FOUND:
            c = certified(sg, colors.copy(), "exact-solver")
            return SolveResult(Status.FOUND, c, nodes)
        if status == kernels.EXHAUSTED:
            return SolveResult(Status.PROVEN_NONE, None, nodes)
        if nodes >= budget.node_limit or time.monotonic() >= deadline:
            return SolveResult(Status.BUDGET_EXCEEDED, None, nodes)


def chromatic_number_exact(g, budget: Optional[SolveBudget] = None) -> int:
    """Least k in 3..7 admitting a colouring.

    Every loop-free T(r, s, t) contains a triangle and embeds in the
    torus, so the answer always lies in that range.
    """
    return chromatic_coloring_exact(g, budget).k


def chromatic_coloring_exact(g, budget: Optional[SolveBudget] = None) -> Coloring:
    sg = as_simple(g)
    for k in range(3, 8):
        res = solve_exact(sg, k, budget)
        if res.status is Status.BUDGET_EXCEEDED:
            raise BudgetExceeded(f"budget exhausted deciding {k}-colourability of {sg.params}")
        if res.found:
            return res.coloring
    raise AssertionError(f"{sg.params} is not 7-colourable, which cannot happen on the torus")
