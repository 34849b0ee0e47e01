"""Graphical arrangements: chromatic polynomials and acyclic orientations.

Regions of the toric graphical arrangement of a connected graph are counted
by the linear coefficient of its chromatic polynomial, and also by acyclic
orientations with a prescribed unique sink.

Run: python3 demos/05_graphs.py
"""

from cdindex.arrangement_euclid import characteristic_polynomial
from cdindex.graphs import (
    SimpleGraph,
    acyclic_orientations,
    chromatic_polynomial,
    graphical_arrangement,
    toric_graphical_region_count,
    unique_sink_acyclic_orientations,
)

graphs = {
    "K3": SimpleGraph.complete(3),
    "C4": SimpleGraph.cycle(4),
    "P4": SimpleGraph.path(4),
    "K4": SimpleGraph.complete(4),
    "2K2": SimpleGraph.make(4, [(0, 1), (2, 3)]),
}
for name, G in graphs.items():
    chi = chromatic_polynomial(G)
    same = chi == characteristic_polynomial(graphical_arrangement(G))
    print(f"{name}: chi = {chi} (matches arrangement: {same})")
    print(f"  acyclic orientations {acyclic_orientations(G)} = (-1)^n chi(-1) = {(-1) ** G.n * chi(-1)}")
    print(f"  toric regions {toric_graphical_region_count(G)}")
    if G.is_connected():
        sinks = [unique_sink_acyclic_orientations(G, v) for v in range(G.n)]
        print(f"  unique-sink orientations per vertex {sinks}")
