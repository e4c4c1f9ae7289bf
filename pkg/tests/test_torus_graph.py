from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import all_params, multigraph, vid
from torchroma.chroma_oracle import loop_criterion, normalize
from torchroma.torus_graph import (InvalidParams, LoopError, TorusParams, build_graph,
                                   classify_edges, has_loops, is_simple, neighbors,
                                   underlying_simple_graph, vertex_id, vertex_of)

SMALL = list(all_params(60))


@st.composite
def triples(draw, max_n=400):
    r = draw(st.integers(1, 20))
    s = draw(st.integers(1, max(1, max_n // r)))
    t = draw(st.integers(0, s - 1))
    return TorusParams(r, s, t)


@pytest.mark.parametrize("bad", [(0, 3, 0), (2, 0, 0), (3, 4, 4), (3, 4, -1), (1.0, 2, 0), (True, 2, 0)])
def test_rejects_invalid_triples(bad):
    with pytest.raises(InvalidParams):
        TorusParams(*bad)


def test_vertex_ids_round_trip():
    p = TorusParams(5, 6, 2)
    for v in range(p.n):
        assert vertex_id(p, vertex_of(p, v)) == v
    assert vertex_id(p, (1, 1)) == 0 and vertex_id(p, (5, 6)) == 29


def test_t562_corner_neighbours():
    g = build_graph((5, 6, 2))
    p = g.params
    want = {(1, 2), (1, 6), (2, 1), (2, 6), (5, 4), (5, 3)}
    assert {vertex_of(p, v) for v in g.adj[0]} == want


def test_neighbours_interior_and_last_column():
    p = TorusParams(5, 6, 2)
    assert Counter(neighbors(p, (3, 3))) == Counter([(3, 2), (3, 4), (2, 3), (4, 3), (2, 4), (4, 2)])
    assert Counter(neighbors(p, (5, 1))) == Counter([(5, 2), (5, 6), (4, 2), (4, 1), (1, 5), (1, 4)])


def test_neighbours_single_column_multiset():
    got = Counter(neighbors((1, 5, 1), (1, 1)))
    assert got == Counter([(1, 2), (1, 5), (1, 2), (1, 5), (1, 3), (1, 4)])
    g = build_graph((1, 5, 1))
    assert Counter(g.adj[0].tolist()) == Counter(vid(g.params, v) for v in got.elements())


def test_t172_is_k7():
    g = build_graph((1, 7, 2))
    rep = classify_edges(g)
    assert rep.is_simple
    assert sorted(g.edges()) == [(u, v) for u in range(7) for v in range(u + 1, 7)]


def test_t130_every_vertex_has_a_loop():
    g = build_graph((1, 3, 0))
    rep = classify_edges(g)
    assert rep.has_loops and len(rep.loop_vertices) == 3
    assert all(g.multiplicity(v, v) >= 1 for v in range(3))


@pytest.mark.parametrize("p, loops, simple", [
    ((1, 5, 0), True, False), ((2, 7, 5), False, False), ((5, 6, 2), False, True),
])
def test_edge_reports(p, loops, simple):
    rep = classify_edges(build_graph(p))
    assert rep.has_loops is loops
    assert rep.is_simple is simple
    if p == (2, 7, 5):
        assert rep.has_parallel_edges


def test_builder_matches_neighbour_rules_up_to_60():
    for p in SMALL:
        g = build_graph(p)
        for v in range(p.n):
            want = sorted(vid(p, w) for w in neighbors(p, vertex_of(p, v)))
            assert g.adj[v].tolist() == want, (p, v)


def test_six_regular_and_symmetric_up_to_60():
    for p in SMALL:
        g = build_graph(p)
        assert g.adj.shape == (p.n, 6)
        for u in range(p.n):
            for v in set(g.adj[u].tolist()):
                assert np.count_nonzero(g.adj[u] == v) == np.count_nonzero(g.adj[v] == u)
        # 3n edges counting multiplicity, a loop counted once
        assert len(g.edges()) == 3 * p.n


def test_loop_detection_matches_criterion_up_to_60():
    for p in SMALL:
        built = classify_edges(build_graph(p)).has_loops
        assert built == loop_criterion(normalize(p)) == has_loops(p), p


def test_wide_graphs_simple_iff_three_rows():
    for p in SMALL:
        if p.r >= 3:
            assert classify_edges(build_graph(p)).is_simple == (p.s >= 3), p
            if p.s == 1:
                assert has_loops(p)
            if p.s == 2:
                assert not has_loops(p) and not is_simple(p)


def test_arithmetic_simplicity_matches_built_graph():
    for p in SMALL:
        rep = classify_edges(build_graph(p))
        assert rep.is_simple == is_simple(p) == (not rep.has_loops and not rep.has_parallel_edges)


def test_two_column_multigraph_iff_degenerate_shift():
    for s in range(3, 20):
        for t in range(s):
            rep = classify_edges(build_graph((2, s, t)))
            assert (not rep.is_simple) == (t in (0, s - 2, s - 1)), (s, t)


@pytest.mark.parametrize("p, k", [((1, 5, 1), 5), ((1, 6, 2), 6)])
def test_underlying_graph_is_complete(p, k):
    sg = underlying_simple_graph(build_graph(p))
    assert sorted(sg.edges()) == [(u, v) for u in range(k) for v in range(u + 1, k)]


def test_underlying_graph_of_simple_graph_is_unchanged():
    g = build_graph((5, 6, 2))
    sg = underlying_simple_graph(g)
    assert sorted(sg.edges()) == sorted(g.edges())
    assert np.all(sg.deg == 6)


def test_underlying_graph_rejects_loops():
    with pytest.raises(LoopError):
        underlying_simple_graph(build_graph((1, 4, 0)))


def test_edge_list_agrees_with_reference_multigraph():
    for p in all_params(24):
        ref = sorted(tuple(sorted(e)) for e in multigraph(p).edges())
        assert sorted(build_graph(p).edges()) == ref


@given(triples())
def test_random_graphs_regular(p):
    g = build_graph(p)
    assert g.adj.shape == (p.n, 6)
    assert classify_edges(g).has_loops == has_loops(p)
