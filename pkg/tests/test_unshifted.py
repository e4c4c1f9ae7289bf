import numpy as np
from hypothesis import given, strategies as st

from oracles import is_proper, simple_adjacency
from torchroma.torus_graph import TorusParams
from torchroma.unshifted import (COMPOSE, IDENTITY, INVERSE, PERMS, base_patterns,
                                 columns_by_shifts, construct_unshifted)


def test_permutation_tables():
    for a in range(24):
        assert COMPOSE[a, INVERSE[a]] == IDENTITY == COMPOSE[INVERSE[a], a]
        for b in range(24):
            assert np.array_equal(PERMS[COMPOSE[a, b]], PERMS[a][PERMS[b]])


def test_base_patterns_are_proper_cycle_colourings():
    for q in range(3, 30):
        for col in base_patterns(q):
            assert len(col) == q and np.all(col != np.roll(col, -1))
        for col in base_patterns(q, distance_two=True):
            assert np.all(col != np.roll(col, -2))


def test_columns_by_shifts_starts_with_a_distance_two_column():
    for p, q in [(3, 7), (4, 9), (6, 10), (8, 12)]:
        block = columns_by_shifts(p, q, distance_two=True)
        assert block.shape == (p, q)
        assert np.all(block[0] != np.roll(block[0], -2))
        assert is_proper(simple_adjacency(TorusParams(p, q, 0)), block.reshape(-1).tolist())


@given(st.integers(3, 60), st.integers(3, 60))
def test_construction_is_proper(p, q):
    colors = construct_unshifted(p, q)
    assert colors is not None and set(colors.tolist()) <= {1, 2, 3, 4}
    assert is_proper(simple_adjacency(TorusParams(p, q, 0)), colors.tolist())
