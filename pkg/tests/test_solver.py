import numpy as np
import pytest

from oracles import all_params, chromatic_number, is_proper, simple_adjacency
from torchroma.certificates import Coloring, verify_coloring
from torchroma.solver import (BudgetExceeded, SolveBudget, Status, chromatic_number_exact,
                              solve_exact)
from torchroma.torus_graph import LoopError, TorusParams, build_graph, has_loops


def test_k7_has_no_six_colouring():
    assert solve_exact(build_graph((1, 7, 2)), 6).status is Status.PROVEN_NONE
    assert solve_exact(build_graph((1, 7, 2)), 7).found


def test_counterexample_needs_five():
    g = build_graph((3, 5, 3))
    assert solve_exact(g, 4).status is Status.PROVEN_NONE
    res = solve_exact(g, 5)
    assert res.found and verify_coloring(g, res.coloring)


def test_three_by_three_unshifted_three_colourable():
    assert solve_exact(build_graph((3, 3, 0)), 3).found


@pytest.mark.parametrize("p, chi", [((1, 11, 2), 6), ((2, 6, 0), 4), ((1, 9, 1), 3)])
def test_exact_chromatic_numbers(p, chi):
    assert chromatic_number_exact(build_graph(p)) == chi


def test_found_colourings_are_proper():
    for p in all_params(30):
        if has_loops(p):
            continue
        g = build_graph(p)
        for k in (3, 4):
            res = solve_exact(g, k)
            if res.found:
                c = res.coloring
                assert c.verified and c.k <= k
                assert is_proper(simple_adjacency(p), c.colors.tolist())


def test_agrees_with_plain_backtracking_up_to_16():
    for p in all_params(16):
        if has_loops(p):
            continue
        assert chromatic_number_exact(build_graph(p)) == chromatic_number(simple_adjacency(p)), p


def test_monotone_in_k():
    for p in [(3, 7, 5), (1, 13, 3), (2, 9, 3), (5, 5, 2), (1, 17, 4)]:
        g = build_graph(p)
        for k in range(3, 8):
            if solve_exact(g, k).status is Status.PROVEN_NONE:
                assert solve_exact(g, k - 1).status is Status.PROVEN_NONE


def test_budget_is_honoured():
    g = build_graph((1, 46, 22))
    res = solve_exact(g, 4, SolveBudget(node_limit=1000))
    assert res.status is Status.BUDGET_EXCEEDED and res.nodes <= 1000
    with pytest.raises(BudgetExceeded):
        chromatic_number_exact(g, SolveBudget(node_limit=1000))


def test_budget_rejects_nonsense():
    with pytest.raises(ValueError):
        SolveBudget(node_limit=0)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("TORCHROMA_BUDGET_NODES", "1234")
    assert SolveBudget.default().node_limit == 1234


def test_loops_are_refused():
    with pytest.raises(LoopError):
        solve_exact(build_graph((1, 5, 0)), 3)


def test_verify_rejects_bad_assignments():
    g = build_graph((5, 6, 2))
    p = TorusParams(5, 6, 2)
    assert not verify_coloring(g, Coloring(p, np.ones(30, dtype=np.int64), 1, "x"))
    with pytest.raises(ValueError):
        verify_coloring(g, Coloring(p, np.ones(29, dtype=np.int64), 1, "x"))
    partial = np.arange(30) % 3 + 1
    partial[4] = 0
    with pytest.raises(ValueError):
        verify_coloring(g, Coloring(p, partial, 3, "x"))


def test_verify_examples():
    two = np.array([1, 2, 1, 2, 3, 4, 3, 4])
    assert verify_coloring(build_graph((2, 4, 0)), Coloring(TorusParams(2, 4, 0), two, 4, "x"))
    seq = np.tile(np.arange(1, 5), 2)
    assert verify_coloring(build_graph((1, 8, 2)), Coloring(TorusParams(1, 8, 2), seq, 4, "x"))
