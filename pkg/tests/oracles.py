"""Independent reference implementations used only by the tests.

Nothing here imports the adjacency builder, the lattice code or the
DSATUR kernel: graphs come from the per-vertex neighbour rules, circuit
lengths from walking, isomorphism from networkx and colourings from
plain backtracking.
"""

from itertools import product

import networkx as nx

from torchroma.torus_graph import TorusParams, neighbors


def all_params(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for r in range(1, n + 1):
            if n % r == 0:
                s = n // r
                for t in range(s):
                    yield TorusParams(r, s, t)


def vid(p, v):
    return (v[0] - 1) * p.s + v[1] - 1


def multigraph(p):
    """networkx MultiGraph from the neighbour rules (loops once per loop)."""
    g = nx.MultiGraph()
    g.add_nodes_from(range(p.n))
    for i, j in product(range(1, p.r + 1), range(1, p.s + 1)):
        u = vid(p, (i, j))
        nb = [vid(p, w) for w in neighbors(p, (i, j))]
        for v in nb:
            if v > u:
                g.add_edge(u, v)
        for _ in range(nb.count(u) // 2):
            g.add_edge(u, u)
    return g


def simple_adjacency(p):
    return [sorted({vid(p, w) for w in neighbors(p, (i, j))} - {vid(p, (i, j))})
            for i, j in product(range(1, p.r + 1), range(1, p.s + 1))]


def _step(p, v, direction):
    i, j = v
    di, dj = {"vertical": (0, 1), "horizontal": (1, 0), "diagonal": (1, -1)}[direction]
    i, j = i + di, j + dj
    if i > p.r:
        # leaving column r lands in column 1, t rows lower
        i, j = 1, j - p.t
    return (i, (j - 1) % p.s + 1)


def walk_lengths(p):
    """Lengths of the three straight walks from (1, 1), sorted descending."""
    out = []
    for d in ("vertical", "horizontal", "diagonal"):
        v = start = (1, 1)
        steps = 0
        while True:
            nxt = _step(p, v, d)
            assert nxt in neighbors(p, v)
            v = nxt
            steps += 1
            if v == start:
                break
        out.append(steps)
    return tuple(sorted(out, reverse=True))


def isomorphic(p1, p2):
    return nx.is_isomorphic(multigraph(p1), multigraph(p2))


def k_colorable(adj, k):
    """Plain backtracking in vertex order; returns a colouring or None."""
    n = len(adj)
    colors = [0] * n

    def go(v):
        if v == n:
            return True
        used = {colors[w] for w in adj[v] if w < v}
        top = max(colors[:v], default=0)
        for c in range(1, min(k, top + 1) + 1):
            if c not in used:
                colors[v] = c
                if go(v + 1):
                    return True
        colors[v] = 0
        return False

    return list(colors) if go(0) else None


def chromatic_number(adj):
    k = 1
    while k_colorable(adj, k) is None:
        k += 1
    return k


def is_proper(adj, colors):
    return all(colors[u] != colors[v] for u in range(len(adj)) for v in adj[u])
