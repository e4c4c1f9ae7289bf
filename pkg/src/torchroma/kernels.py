"""Hot loops: resumable DSATUR backtracking and edge verification.

Both functions work on plain int64 arrays so the same source runs under
numba or as ordinary Python (see ``_accel``).
"""

import numpy as np

from ._accel import njit

FOUND = 0
EXHAUSTED = 1
PAUSED = 2


@njit
def count_conflicts(nbr, deg, colors):
    """Number of monochromatic edges (each counted once)."""
    n = nbr.shape[0]
    bad = 0
    for u in range(n):
        cu = colors[u]
        for e in range(deg[u]):
            v = nbr[u, e]
            if v > u and colors[v] == cu:
                bad += 1
    return bad


@njit
def dsatur_search(nbr, deg, k, colors, cnt, sat, stack_v, stack_c, top, state, max_nodes):
    """Advance the search by at most ``max_nodes`` colour assignments.

    State lives entirely in the argument arrays: ``colors[v]`` (0 = none),
    ``cnt[v, c]`` colored neighbours of v with colour c, ``sat[v]``
    distinct neighbour colours, per-depth vertex/colour/max-colour stacks
    and ``state = [depth, nodes]``. Calling again after ``PAUSED``
    resumes exactly where it stopped.
    """
    n = nbr.shape[0]
    d = state[0]
    nodes = 0
    while True:
        if nodes >= max_nodes:
            state[0] = d
            state[1] += nodes
            return PAUSED
        v = stack_v[d]
        c = stack_c[d]
        if c > 0:
            colors[v] = 0
            for e in range(deg[v]):
                w = nbr[v, e]
                cnt[w, c] -= 1
                if cnt[w, c] == 0:
                    sat[w] -= 1
        # colours above max-used + 1 are symmetric copies of max-used + 1
        limit = top[d] + 1
        if limit > k:
            limit = k
        c += 1
        while c <= limit and cnt[v, c] > 0:
            c += 1
        if c > limit:
            stack_c[d] = 0
            d -= 1
            if d < 0:
                state[0] = 0
                state[1] += nodes
                return EXHAUSTED
            continue
        stack_c[d] = c
        colors[v] = c
        nodes += 1
        for e in range(deg[v]):
            w = nbr[v, e]
            if cnt[w, c] == 0:
                sat[w] += 1
            cnt[w, c] += 1
        if d + 1 == n:
            state[0] = d
            state[1] += nodes
            return FOUND
        # next vertex: max saturation, then max uncoloured degree, then lowest id
        best = -1
        best_sat = -1
        best_free = -1
        for u in range(n):
            if colors[u] != 0:
                continue
            free = 0
            for e in range(deg[u]):
                if colors[nbr[u, e]] == 0:
                    free += 1
            if sat[u] > best_sat or (sat[u] == best_sat and free > best_free):
                best = u
                best_sat = sat[u]
                best_free = free
        top[d + 1] = top[d] if top[d] >= c else c
        d += 1
        stack_v[d] = best
        stack_c[d] = 0


def new_search_state(n, k, start=0):
    colors = np.zeros(n, dtype=np.int64)
    cnt = np.zeros((n, k + 2), dtype=np.int64)
    sat = np.zeros(n, dtype=np.int64)
    stack_v = np.zeros(n, dtype=np.int64)
    stack_c = np.zeros(n, dtype=np.int64)
    top = np.zeros(n + 1, dtype=np.int64)
    stack_v[0] = start
    state = np.zeros(2, dtype=np.int64)
    return colors, cnt, sat, stack_v, stack_c, top, state
