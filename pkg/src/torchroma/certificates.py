"""Colorings and the one checker every producer goes through."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import count_conflicts
from .torus_graph import TorusParams, as_simple


class ColoringError(RuntimeError):
    """A construction could not produce a proper colouring."""


@dataclass(frozen=True)
class Coloring:
    """``colors[vid]`` in ``1..k`` for every vertex id of ``params``."""

    params: TorusParams
    colors: np.ndarray = field(repr=False)
    k: int
    strategy: str
    verified: bool = False

    @property
    def num_colors(self) -> int:
        return int(len(np.unique(self.colors)))

    def grid(self) -> np.ndarray:
        """Colours as an ``(r, s)`` array: row ``i - 1`` is column ``i``."""
        return self.colors.reshape(self.params.r, self.params.s)

    def to_json(self) -> dict:
        p = self.params
        return {"r": p.r, "s": p.s, "t": p.t, "k": self.k,
                "strategy": self.strategy, "colors": self.grid().tolist()}

    def render(self) -> str:
        """Text grid laid out like the usual drawing: row s on top, column 1 on the left."""
        g = self.grid()
        width = len(str(self.k))
        lines = []
        for j in range(self.params.s - 1, -1, -1):
            lines.append(" ".join(str(c).rjust(width) for c in g[:, j]))
        return "\n".join(lines)


def verify_coloring(g, c: Coloring) -> bool:
    """True iff no edge of ``g`` is monochromatic.

    Parallel edges add nothing beyond the simple constraint; loops make
    every colouring improper, so a graph with loops is rejected outright.
    """
    sg = as_simple(g)
    colors = np.asarray(c.colors, dtype=np.int64)
    if colors.shape != (sg.n,):
        raise ValueError(f"assignment covers {colors.size} of {sg.n} vertices")
    if np.any(colors < 1):
        raise ValueError("partial assignment: uncoloured vertices present")
    return count_conflicts(sg.nbr, sg.deg, colors) == 0


def certified(g, colors, strategy: str) -> Coloring:
    """Wrap ``colors`` as a Coloring, raising ColoringError if it is improper."""
    colors = np.ascontiguousarray(colors, dtype=np.int64)
    _, colors = np.unique(colors, return_inverse=True)
    colors = colors.reshape(-1) + 1
    c = Coloring(g.params, colors, int(colors.max()), strategy)
    if not verify_coloring(g, c):
        raise ColoringError(f"{strategy} produced an improper colouring of {g.params}")
    return Coloring(c.params, c.colors, c.k, strategy, verified=True)
