import json

import pytest

from torchroma.export import ExportError, to_dimacs, to_dot, to_json, to_json_obj
from torchroma.torus_graph import LoopError, build_graph


def test_dimacs_k7():
    text = to_dimacs(build_graph((1, 7, 2)))
    lines = text.splitlines()
    assert lines[1] == "p edge 7 21"
    edges = [tuple(map(int, l.split()[1:])) for l in lines if l.startswith("e ")]
    assert sorted(edges) == [(u, v) for u in range(1, 8) for v in range(u + 1, 8)]


def test_dimacs_ids_are_one_based_row_major():
    text = to_dimacs(build_graph((5, 6, 2)))
    # (1,1) -- (5,4) is 1 -- (4*6 + 4)
    assert "e 1 28" in text.splitlines()


def test_dimacs_multigraph_needs_simplify():
    g = build_graph((1, 5, 1))
    with pytest.raises(ExportError):
        to_dimacs(g)
    assert to_dimacs(g, simplify=True).splitlines()[1] == "p edge 5 10"


def test_dimacs_refuses_loops_even_simplified():
    g = build_graph((1, 5, 0))
    with pytest.raises(ExportError):
        to_dimacs(g, simplify=True)


def test_json_counts():
    obj = json.loads(to_json(build_graph((5, 6, 2))))
    assert (obj["r"], obj["s"], obj["t"]) == (5, 6, 2)
    assert len(obj["edges"]) == 90
    assert {v for e in obj["edges"] for v in e} == set(range(1, 31))


def test_json_expands_multiplicities():
    obj = to_json_obj(build_graph((1, 5, 1)))
    assert len(obj["edges"]) == 15
    assert obj["edges"].count([1, 2]) == 2
    assert len(to_json_obj(build_graph((1, 5, 1)), simplify=True)["edges"]) == 10


def test_json_keeps_loops_unless_simplified():
    obj = to_json_obj(build_graph((1, 3, 0)))
    assert [1, 1] in obj["edges"]
    with pytest.raises(LoopError):
        to_json_obj(build_graph((1, 3, 0)), simplify=True)


def test_dot_labels_and_edges():
    text = to_dot(build_graph((2, 3, 1)))
    assert text.startswith('graph "T(2,3,1)" {')
    assert '  6 [label="(2,3)"];' in text
    assert text.count(" -- ") == 18
