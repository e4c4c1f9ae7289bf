"""Lattice model of T(r, s, t) and canonical parameters.

T(r, s, t) is the Cayley graph of Z^2 / L on the steps
±(0, 1), ±(1, 0), ±(1, -1), where L is spanned by (r, t) and (0, s) and
vertex (i, j) is the coset of (i - 1, j - 1). Any unimodular map that
permutes the six steps carries L to a lattice whose quotient graph is
isomorphic; there are twelve such maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .torus_graph import TorusParams, as_params

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

STEPS = ((0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1))
DIRECTIONS = {"vertical": (0, 1), "horizontal": (1, 0), "diagonal": (1, -1)}


@dataclass(frozen=True)
class LatticeBasis:
    """Rows are generators of the sublattice L."""

    rows: Matrix

    @classmethod
    def of(cls, p) -> "LatticeBasis":
        p = as_params(p)
        return cls(((p.r, p.t), (0, p.s)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.rows
        return a * d - b * c


@dataclass(frozen=True, order=True)
class NormalLengths:
    a: int
    b: int
    c: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _mat_mul(g: Matrix, h: Matrix) -> Matrix:
    return tuple(
        tuple(sum(g[i][k] * h[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def _apply(g: Matrix, v: Tuple[int, int]) -> Tuple[int, int]:
    return (g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1])


_ID: Matrix = ((1, 0), (0, 1))
# 60-degree rotation: (1,0) -> (0,1) -> (-1,1) -> (-1,0) ...
_ROT: Matrix = ((0, -1), (1, 1))
# swaps (1,0) and (0,1), sends (1,-1) to (-1,1)
_REFL: Matrix = ((0, 1), (1, 0))


def _build_group() -> Tuple[Matrix, ...]:
    rots = [_ID]
    for _ in range(5):
        rots.append(_mat_mul(_ROT, rots[-1]))
    return tuple(rots + [_mat_mul(g, _REFL) for g in rots])


POINT_GROUP: Tuple[Matrix, ...] = _build_group()


def normal_circuit_lengths(p) -> NormalLengths:
    p = as_params(p)
    n = p.n
    lengths = sorted((p.s, n // gcd(p.s, p.t), n // gcd(p.s, p.r + p.t)), reverse=True)
    return NormalLengths(*lengths)


def direction_lengths(p) -> Dict[str, int]:
    p = as_params(p)
    n = p.n
    return {
        "vertical": p.s,
        "horizontal": n // gcd(p.s, p.t),
        "diagonal": n // gcd(p.s, p.r + p.t),
    }


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_params(basis: LatticeBasis) -> TorusParams:
    """Read (r, s, t) with 0 <= t < s back from any basis of the lattice."""
    (a, b), (c, d) = basis.rows
    det = a * d - b * c
    if det == 0:
        raise ValueError(f"degenerate basis {basis.rows}")
    g, x, y = _ext_gcd(a, c)
    s = abs(det) // g
    t = (x * b + y * d) % s
    return TorusParams(g, s, t)


def symmetry_images(basis: LatticeBasis) -> List[LatticeBasis]:
    """The twelve images of the lattice under the step-preserving maps."""
    return [
        LatticeBasis(tuple(_apply(g, v) for v in basis.rows)) for g in POINT_GROUP
    ]


def image_maps(p) -> Iterator[Tuple[TorusParams, Matrix]]:
    """Yield ``(p', g)`` where ``g`` maps the lattice of ``p`` onto that of ``p'``."""
    base = LatticeBasis.of(p)
    for g, img in zip(POINT_GROUP, symmetry_images(base)):
        yield hnf_params(img), g


@lru_cache(maxsize=None)
def _canonical(key: Tuple[int, int, int]) -> TorusParams:
    return min(q for q, _ in image_maps(TorusParams(*key)))


def canonical_form(p) -> TorusParams:
    return _canonical(as_params(p).as_tuple())


def are_isomorphic(p1, p2) -> bool:
    return canonical_form(p1) == canonical_form(p2)


def reduce_point(p: TorusParams, x: int, y: int) -> int:
    """Vertex id of the coset of the lattice point (x, y)."""
    k = x // p.r
    return (x - k * p.r) * p.s + (y - k * p.t) % p.s


def vertex_map(p, q: TorusParams, g: Matrix) -> np.ndarray:
    """``out[v]`` is the vertex of ``q`` that vertex ``v`` of ``p`` goes to under ``g``."""
    p = as_params(p)
    i = np.repeat(np.arange(p.r), p.s)
    j = np.tile(np.arange(p.s), p.r)
    x = g[0][0] * i + g[0][1] * j
    y = g[1][0] * i + g[1][1] * j
    k = np.floor_divide(x, q.r)
    return (x - k * q.r) * q.s + np.mod(y - k * q.t, q.s)


def reparameterize_with_map(p, direction: str) -> Tuple[TorusParams, Matrix]:
    """Representation whose vertical circuits run along ``direction`` of ``p``."""
    p = as_params(p)
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    d = DIRECTIONS[direction]
    best = None
    for q, g in image_maps(p):
        if _apply(g, d) in ((0, 1), (0, -1)):
            if best is None or q < best[0]:
                best = (q, g)
    return best


def reparameterize(p, direction: str) -> TorusParams:
    return reparameterize_with_map(p, direction)[0]


def enumerate_order(n: int) -> List[TorusParams]:
    """Canonical representatives of every T(r, s, t) with r * s = n."""
    if n < 1:
        raise ValueError("order must be positive")
    classes = set()
    for r in range(1, n + 1):
        if n % r:
            continue
        s = n // r
        for t in range(s):
            classes.add(canonical_form((r, s, t)))
    return sorted(classes)


def class_record(p) -> dict:
    p = as_params(p)
    return {"r": p.r, "s": p.s, "t": p.t,
            "circuits": list(normal_circuit_lengths(p).as_tuple())}
