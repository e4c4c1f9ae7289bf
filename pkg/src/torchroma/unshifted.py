"""Proper 4-colourings of the unshifted grids T(p, q, 0).

Each column of length q is an image ``sigma(C(x + d))`` of one base column
pattern C: a relabelling sigma of the four colours composed with a
vertical shift d. Column i + 1 is compatible with column i when
``col[i+1][x]`` avoids ``col[i][x]`` and ``col[i][x+1]``; that relation is
invariant under applying the same (sigma, d) to both columns, so the
search runs over the group S4 x Z_P (P the period of C). It looks for p
moves whose product fixes C, which closes the torus.

Base patterns are concatenations of the height-3 band ``123`` and the
height-4 band ``1234``, the pure 3- and 4-periodic columns, and for short
columns every proper colouring of the cycle.
"""

from __future__ import annotations

from itertools import islice, permutations, product
from typing import Iterator, List, Optional, Tuple

import numpy as np

PERMS = np.array(list(permutations(range(4))), dtype=np.int64)
_PERM_INDEX = {tuple(p): k for k, p in enumerate(PERMS.tolist())}
# COMPOSE[a, b] = index of PERMS[a] o PERMS[b]
COMPOSE = np.array(
    [[_PERM_INDEX[tuple(PERMS[a][PERMS[b]])] for b in range(24)] for a in range(24)],
    dtype=np.int64,
)
INVERSE = np.array([_PERM_INDEX[tuple(np.argsort(PERMS[a]))] for a in range(24)])
IDENTITY = _PERM_INDEX[(0, 1, 2, 3)]

_MAX_LAYER_CELLS = 20_000_000
_EXHAUSTIVE_MAX_Q = 7
_ARRANGEMENTS_PER_PERIOD = 6


def _divisors(q: int) -> List[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


def _band_arrangements(length: int) -> Iterator[List[int]]:
    """Band heights (3s and 4s) summing to ``length``, a few orderings each."""
    for fours in range(length // 4 + 1):
        rest = length - 4 * fours
        if rest % 3:
            continue
        threes = rest // 3
        yield [4] * fours + [3] * threes
        if fours and threes:
            mixed, a, b = [], fours, threes
            while a or b:
                if a:
                    mixed.append(4)
                    a -= 1
                if b:
                    mixed.append(3)
                    b -= 1
            yield mixed


def _cycle_colorings(q: int) -> Iterator[np.ndarray]:
    """Proper 4-colourings of the q-cycle with colours introduced in order."""
    for tail in product(range(4), repeat=q - 1):
        col = (0,) + tail
        seen = 0
        ok = True
        for c in col:
            if c > seen:
                ok = False
                break
            if c == seen:
                seen += 1
        if not ok:
            continue
        if all(col[x] != col[(x + 1) % q] for x in range(q)):
            yield np.array(col, dtype=np.int64)


def base_patterns(q: int, distance_two: bool = False) -> List[np.ndarray]:
    """Candidate base columns of length ``q`` (colours 0..3).

    With ``distance_two`` only columns whose entries two apart also differ
    are returned; those admit the plain one-step upward shift.
    """
    found = []
    seen = set()

    def push(col):
        key = tuple(col.tolist())
        if key not in seen:
            seen.add(key)
            found.append(col)

    for period in _divisors(q):
        if period < 3 or period == 5:
            continue
        for bands in islice(_band_arrangements(period), _ARRANGEMENTS_PER_PERIOD):
            unit = np.concatenate([np.arange(b) for b in bands])
            push(np.tile(unit, q // period))
    if q <= _EXHAUSTIVE_MAX_Q and q >= 3:
        for col in _cycle_colorings(q):
            push(col)
    if distance_two:
        found = [c for c in found if np.all(c != np.roll(c, -2))]
    return found


def _period(col: np.ndarray) -> int:
    q = len(col)
    for d in _divisors(q):
        if np.array_equal(col, np.roll(col, -d)):
            return d
    return q


def _moves(col: np.ndarray, period: int) -> Tuple[np.ndarray, np.ndarray]:
    """Boolean tables (24, P): compatible successors and stabiliser of ``col``."""
    up = np.roll(col, -1)
    ok = np.zeros((24, period), dtype=bool)
    stab = np.zeros((24, period), dtype=bool)
    for d in range(period):
        shifted = PERMS[:, np.roll(col, -d)]
        ok[:, d] = np.all((shifted != col) & (shifted != up), axis=1)
        stab[:, d] = np.all(shifted == col, axis=1)
    return ok, stab


def _group_search(p: int, period: int, ok: np.ndarray, stab: np.ndarray):
    if p * 24 * period > _MAX_LAYER_CELLS:
        return None
    moves = list(zip(*np.nonzero(ok)))
    if not moves:
        return None
    layers = np.zeros((p + 1, 24, period), dtype=bool)
    layers[0, IDENTITY, 0] = True
    for k in range(p):
        cur = layers[k]
        nxt = layers[k + 1]
        for tau, e in moves:
            idx = COMPOSE[:, tau]
            nxt[idx] |= np.roll(cur, e, axis=1)
    hits = np.argwhere(layers[p] & stab)
    if len(hits) == 0:
        return None
    sigma, d = (int(v) for v in hits[0])
    path = []
    for k in range(p, 0, -1):
        for tau, e in moves:
            prev_sigma = COMPOSE[sigma, INVERSE[tau]]
            prev_d = (d - e) % period
            if layers[k - 1, prev_sigma, prev_d]:
                path.append((int(tau), int(e)))
                sigma, d = int(prev_sigma), prev_d
                break
        else:
            raise AssertionError("layer bookkeeping is inconsistent")
    path.reverse()
    return path


def _assemble(col: np.ndarray, path: List[Tuple[int, int]]) -> np.ndarray:
    """Stack columns g_0 C, g_1 C, ... for the partial products of ``path``."""
    p = len(path)
    q = len(col)
    out = np.empty((p, q), dtype=np.int64)
    sigma, d = IDENTITY, 0
    for i in range(p):
        out[i] = PERMS[sigma][np.roll(col, -d)]
        tau, e = path[i]
        sigma, d = COMPOSE[sigma, tau], d + e
    return out


def _closed_form_pass(p: int, q: int, distance_two: bool) -> Optional[np.ndarray]:
    for col in base_patterns(q, distance_two):
        if not np.all(col != np.roll(col, -2)):
            continue
        period = _period(col)
        # -1 and +2 are compatible moves for any column with distinct entries two apart
        for b in range(min(p, 3 * period) + 1):
            if (3 * b - p) % period == 0:
                path = [(IDENTITY, 2 % period)] * b + [(IDENTITY, (-1) % period)] * (p - b)
                return _assemble(col, path) + 1
    return None


def _group_pass(p: int, q: int, distance_two: bool) -> Optional[np.ndarray]:
    candidates = sorted(base_patterns(q, distance_two), key=_period)
    for col in candidates:
        period = _period(col)
        if 24 * period * q > _MAX_LAYER_CELLS:
            continue
        ok, stab = _moves(col, period)
        path = _group_search(p, period, ok, stab)
        if path is not None:
            return _assemble(col, path) + 1
    return None


def columns_by_shifts(p: int, q: int, distance_two: bool = False) -> Optional[np.ndarray]:
    """A ``(p, q)`` array colouring T(p, q, 0) column by column, or None.

    Column 0 is the base pattern itself, so with ``distance_two`` it can be
    extended further by one-step upward shifts.
    """
    block = _closed_form_pass(p, q, distance_two)
    if block is None:
        block = _group_pass(p, q, distance_two)
    return block


def construct_unshifted(p: int, q: int) -> Optional[np.ndarray]:
    """Try both orientations; returns colours indexed by vertex id of T(p, q, 0)."""
    # T(p, q, 0) and T(q, p, 0) are mirror images: (i, j) <-> (j, i)
    for search in (_closed_form_pass, _group_pass):
        block = search(p, q, False)
        if block is not None:
            return block.reshape(-1)
        block = search(q, p, False)
        if block is not None:
            return block.T.reshape(-1)
    return None
