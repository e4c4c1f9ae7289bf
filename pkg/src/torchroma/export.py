"""DOT, DIMACS .col and JSON renderings of T(r, s, t).

All formats use the 1-based id ``(i - 1) * s + j`` for vertex (i, j).
"""

from __future__ import annotations

import json

from .torus_graph import TorusGraph, classify_edges, underlying_simple_graph, vertex_of


class ExportError(ValueError):
    """The requested format cannot represent this graph."""


def _edge_list(g: TorusGraph, simplify: bool):
    if simplify:
        return underlying_simple_graph(g).edges()
    return g.edges()


def to_dot(g: TorusGraph, simplify: bool = False) -> str:
    p = g.params
    lines = [f'graph "{p}" {{']
    for v in range(g.n):
        i, j = vertex_of(p, v)
        lines.append(f'  {v + 1} [label="({i},{j})"];')
    for u, v in _edge_list(g, simplify):
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dimacs(g: TorusGraph, simplify: bool = False) -> str:
    report = classify_edges(g)
    if report.has_loops:
        raise ExportError(f"{g.params} has loops; DIMACS needs a simple graph")
    if report.has_parallel_edges and not simplify:
        raise ExportError(f"{g.params} has parallel edges; pass simplify to collapse them")
    edges = _edge_list(g, simplify=True)
    lines = [f"c {g.params}", f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def to_json_obj(g: TorusGraph, simplify: bool = False) -> dict:
    p = g.params
    return {"r": p.r, "s": p.s, "t": p.t,
            "edges": [[u + 1, v + 1] for u, v in _edge_list(g, simplify)]}


def to_json(g: TorusGraph, simplify: bool = False) -> str:
    return json.dumps(to_json_obj(g, simplify)) + "\n"


FORMATS = {"dot": to_dot, "dimacs": to_dimacs, "json": to_json}
