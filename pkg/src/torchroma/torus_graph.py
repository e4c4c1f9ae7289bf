"""Construction of the 6-regular toroidal triangulations T(r, s, t).

Vertices are pairs ``(i, j)`` with ``1 <= i <= r`` (column) and
``1 <= j <= s`` (row). Internally a vertex is the integer id
``(i - 1) * s + (j - 1)``; exported formats add one to that id.

Graphs are multigraphs: every vertex carries exactly six edge endpoints,
a loop contributing two of them to its own vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

Vertex = Tuple[int, int]


class InvalidParams(ValueError):
    """Raised for triples outside ``r >= 1, s >= 1, 0 <= t < s``."""


class LoopError(ValueError):
    """Raised when an operation needs a loop-free graph."""


@dataclass(frozen=True, order=True)
class TorusParams:
    r: int
    s: int
    t: int

    def __post_init__(self):
        for name in ("r", "s", "t"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidParams(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.r < 1 or self.s < 1:
            raise InvalidParams(f"need r >= 1 and s >= 1, got r={self.r}, s={self.s}")
        if not 0 <= self.t < self.s:
            raise InvalidParams(f"need 0 <= t < s, got t={self.t}, s={self.s}")

    @property
    def n(self) -> int:
        return self.r * self.s

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.r, self.s, self.t)

    def __str__(self) -> str:
        return f"T({self.r},{self.s},{self.t})"


def as_params(p) -> TorusParams:
    if isinstance(p, TorusParams):
        return p
    return TorusParams(*p)


def vertex_id(p: TorusParams, v: Vertex) -> int:
    i, j = v
    return (i - 1) * p.s + (j - 1)


def vertex_of(p: TorusParams, vid: int) -> Vertex:
    return (vid // p.s + 1, vid % p.s + 1)


def _check_vertex(p: TorusParams, v: Vertex) -> None:
    i, j = v
    if not (1 <= i <= p.r and 1 <= j <= p.s):
        raise ValueError(f"vertex {v} out of range for {p}")


def _wrap(x: int, m: int) -> int:
    # 1-based representative of x modulo m
    return (x - 1) % m + 1


def neighbors(p, v: Vertex) -> List[Vertex]:
    """The six neighbours of ``v`` (with repetition), in bullet order."""
    p = as_params(p)
    _check_vertex(p, v)
    r, s, t = p.as_tuple()
    i, j = v
    if r == 1:
        raw = [(1, j + 1), (1, j - 1), (1, j + t), (1, j - t),
               (1, j + t + 1), (1, j - t - 1)]
    elif i == 1:
        raw = [(1, j + 1), (1, j - 1), (2, j), (2, j - 1),
               (r, j + t + 1), (r, j + t)]
    elif i == r:
        raw = [(r, j + 1), (r, j - 1), (r - 1, j + 1), (r - 1, j),
               (1, j - t), (1, j - t - 1)]
    else:
        raw = [(i, j + 1), (i, j - 1), (i + 1, j), (i - 1, j),
               (i + 1, j - 1), (i - 1, j + 1)]
    return [(a, _wrap(b, s)) for a, b in raw]


@dataclass(frozen=True)
class TorusGraph:
    """T(r, s, t) as an ``(n, 6)`` array of sorted neighbour ids."""

    params: TorusParams
    adj: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.params.n

    def edges(self) -> List[Tuple[int, int]]:
        """Edge list ``(u, v)`` with ``u <= v``, multiplicities expanded."""
        out = []
        for u in range(self.n):
            counts = Counter(self.adj[u].tolist())
            for v, m in sorted(counts.items()):
                if v > u:
                    out.extend([(u, v)] * m)
                elif v == u:
                    out.extend([(u, u)] * (m // 2))
        return out

    def multiplicity(self, u: int, v: int) -> int:
        m = int(np.count_nonzero(self.adj[u] == v))
        return m // 2 if u == v else m


@dataclass(frozen=True)
class SimpleGraph:
    """Underlying simple graph: ``nbr`` padded with -1, ``deg`` real degrees."""

    params: TorusParams
    nbr: np.ndarray = field(repr=False)
    deg: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.params.n

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, int(v)) for u in range(self.n)
                for v in self.nbr[u, : self.deg[u]] if v > u]


@dataclass(frozen=True)
class EdgeReport:
    has_loops: bool
    has_parallel_edges: bool
    is_simple: bool
    loop_vertices: List[Vertex]
    parallel_pairs: List[Tuple[Vertex, Vertex, int]]


def _adjacency(p: TorusParams) -> np.ndarray:
    r, s, t = p.as_tuple()
    i = np.repeat(np.arange(r), s)
    j = np.tile(np.arange(s), r)
    # neighbour offsets (di, dj) on the unwrapped triangular lattice
    steps = ((0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1))
    cols = []
    for di, dj in steps:
        x = i + di
        y = j + dj
        # crossing the column seam shifts rows by t: (x + r, y) ~ (x, y - t)
        k = np.floor_divide(x, r)
        cols.append((x - k * r) * s + np.mod(y - k * t, s))
    adj = np.sort(np.stack(cols, axis=1), axis=1)
    adj.setflags(write=False)
    return adj


def build_graph(p) -> TorusGraph:
    """Build the multigraph T(r, s, t)."""
    p = as_params(p)
    return TorusGraph(p, _adjacency(p))


def classify_edges(g: TorusGraph) -> EdgeReport:
    p = g.params
    loops = []
    parallel = []
    for u in range(g.n):
        counts = Counter(g.adj[u].tolist())
        if u in counts:
            loops.append(vertex_of(p, u))
        for v, m in sorted(counts.items()):
            if v > u and m > 1:
                parallel.append((vertex_of(p, u), vertex_of(p, v), m))
    return EdgeReport(
        has_loops=bool(loops),
        has_parallel_edges=bool(parallel),
        is_simple=not loops and not parallel,
        loop_vertices=loops,
        parallel_pairs=parallel,
    )


_STEPS = ((0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1))


def _in_lattice(p: TorusParams, x: int, y: int) -> bool:
    # (x, y) lies in the span of (r, t) and (0, s)
    if x % p.r:
        return False
    return (y - (x // p.r) * p.t) % p.s == 0


def has_loops(p) -> bool:
    """A loop is a step vector lying in the sublattice."""
    p = as_params(p)
    return any(_in_lattice(p, x, y) for x, y in _STEPS)


def is_simple(p) -> bool:
    """No loops and no two distinct steps landing on the same vertex."""
    p = as_params(p)
    if has_loops(p):
        return False
    return not any(
        _in_lattice(p, a[0] - b[0], a[1] - b[1])
        for k, a in enumerate(_STEPS) for b in _STEPS[k + 1:]
    )


def underlying_simple_graph(g: TorusGraph) -> SimpleGraph:
    n = g.n
    if np.any(g.adj == np.arange(n)[:, None]):
        raise LoopError(f"{g.params} has loops; its chromatic number is undefined")
    nbr = np.full((n, 6), -1, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for u in range(n):
        uniq = np.unique(g.adj[u])
        nbr[u, : len(uniq)] = uniq
        deg[u] = len(uniq)
    nbr.setflags(write=False)
    deg.setflags(write=False)
    return SimpleGraph(g.params, nbr, deg)


def as_simple(g) -> SimpleGraph:
    if isinstance(g, SimpleGraph):
        return g
    return underlying_simple_graph(g)
