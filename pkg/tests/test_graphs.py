"""Graphical arrangements, chromatic polynomials and orientation counts."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdindex.arrangement_euclid import characteristic_polynomial
from cdindex.arrangement_toric import toric_characteristic_polynomial
from cdindex.corpus import random_graph
from cdindex.graphs import (
    GraphError,
    SimpleGraph,
    acyclic_orientations,
    chromatic_polynomial,
    graphical_arrangement,
    pinned_toric_arrangement,
    toric_graphical_arrangement,
    toric_graphical_region_count,
    unique_sink_acyclic_orientations,
)
from cdindex.intpoly import IntPoly

seeds = st.integers(0, 10**6)
T = IntPoly([0, 1])
ONE = IntPoly([1])


def _falling(n):
    out = ONE
    for k in range(n):
        out = out * IntPoly([-k, 1])
    return out


def test_graph_validation():
    with pytest.raises(GraphError):
        SimpleGraph.make(2, [(0, 0)])
    with pytest.raises(GraphError):
        SimpleGraph.make(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        SimpleGraph.make(2, [(0, 2)])


def test_arrangement_sizes():
    assert len(graphical_arrangement(SimpleGraph.complete(3))) == 3
    assert len(toric_graphical_arrangement(SimpleGraph.path(3))) == 2
    assert len(toric_graphical_arrangement(SimpleGraph.make(3, []))) == 0


def test_known_chromatic_polynomials():
    assert chromatic_polynomial(SimpleGraph.complete(3)) == _falling(3)
    assert chromatic_polynomial(SimpleGraph.complete(4)) == _falling(4)
    tree = SimpleGraph.path(5)
    assert chromatic_polynomial(tree) == T * IntPoly([-1, 1]) * IntPoly([-1, 1]) * IntPoly([-1, 1]) * IntPoly([-1, 1])
    # C4: (t-1)^4 + (t-1)
    c = IntPoly([-1, 1])
    assert chromatic_polynomial(SimpleGraph.cycle(4)) == c * c * c * c + c


@settings(max_examples=40, deadline=None)
@given(seeds, st.booleans())
def test_chromatic_equals_arrangement_polynomial(seed, connected):
    G = random_graph(seed, connected=connected)
    chi = chromatic_polynomial(G)
    assert chi == characteristic_polynomial(graphical_arrangement(G))
    assert (-1) ** G.n * chi(-1) == acyclic_orientations(G)


def test_toric_graphical_polynomial_relation():
    # adding x_v = 0 turns chi_G(t) into (t - 1) chi_G(t) / t
    G = SimpleGraph.cycle(4)
    pinned = toric_characteristic_polynomial(pinned_toric_arrangement(G))
    chi = chromatic_polynomial(G)
    assert pinned * T == chi * IntPoly([-1, 1])


def test_region_counts():
    assert toric_graphical_region_count(SimpleGraph.complete(3)) == 2
    assert toric_graphical_region_count(SimpleGraph.path(4)) == 1
    assert toric_graphical_region_count(SimpleGraph.cycle(4)) == 3
    two_k2 = SimpleGraph.make(4, [(0, 1), (2, 3)])
    # product of the components' counts, each a single edge with one region
    assert toric_graphical_region_count(two_k2) == 1


def test_unique_sink_counts():
    K3 = SimpleGraph.complete(3)
    assert acyclic_orientations(K3) == 6
    assert [unique_sink_acyclic_orientations(K3, v) for v in range(3)] == [2, 2, 2]
    with pytest.raises(GraphError):
        unique_sink_acyclic_orientations(SimpleGraph.make(3, [(0, 1)]), 0)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_greene_zaslavsky(seed):
    G = random_graph(seed, max_vertices=5)
    if G.n < 2:
        return
    linear = abs(chromatic_polynomial(G).coefficient(1))
    assert toric_graphical_region_count(G) == linear
    assert {unique_sink_acyclic_orientations(G, v) for v in range(G.n)} == {linear}
