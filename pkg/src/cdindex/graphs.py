"""Graphical arrangements and their region counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .arrangement_euclid import AffineArrangement
from .arrangement_toric import ToricArrangement, toric_region_count
from .intpoly import IntPoly

__all__ = [
    "SimpleGraph",
    "GraphError",
    "graphical_arrangement",
    "toric_graphical_arrangement",
    "pinned_toric_arrangement",
    "chromatic_polynomial",
    "toric_graphical_region_count",
    "unique_sink_acyclic_orientations",
    "acyclic_orientations",
]


class GraphError(ValueError):
    """Invalid graph data or a violated precondition."""


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph on vertices ``0..n-1``."""

    n: int
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def make(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "SimpleGraph":
        out = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} names a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in out:
                raise GraphError(f"repeated edge {u}-{v}")
            out.add(e)
        return cls(n, frozenset(out))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.make(n, itertools.combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.make(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.make(n, [(i, i + 1) for i in range(n - 1)])

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> List[List[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups = {}
        for x in range(self.n):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def _edge_normal(n: int, u: int, v: int) -> Tuple[int, ...]:
    return tuple(1 if k == u else -1 if k == v else 0 for k in range(n))


def graphical_arrangement(G: SimpleGraph) -> AffineArrangement:
    """Hyperplanes x_u = x_v in R^n, one per edge."""
    E = G.sorted_edges()
    return AffineArrangement([_edge_normal(G.n, u, v) for u, v in E], [0] * len(E), G.n)


def toric_graphical_arrangement(G: SimpleGraph) -> ToricArrangement:
    """Hyperplanes x_u = x_v in T^n, one per edge."""
    return ToricArrangement.from_equations([_edge_normal(G.n, u, v) for u, v in G.sorted_edges()], dimension=G.n)


def pinned_toric_arrangement(G: SimpleGraph, v: int = 0) -> ToricArrangement:
    """The toric graphical arrangement together with x_v = 0; essential when G is connected."""
    normals = [_edge_normal(G.n, a, b) for a, b in G.sorted_edges()]
    normals.append(tuple(int(k == v) for k in range(G.n)))
    return ToricArrangement.from_equations(normals, dimension=G.n)


def _canonical(n: int, edges: FrozenSet[Tuple[int, int]]) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    # relabel by degree (ties by old label); not an isomorphism invariant, only a
    # cheap way to share cache entries
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    order = sorted(range(n), key=lambda x: (deg[x], x))
    new = {x: i for i, x in enumerate(order)}
    return n, tuple(sorted((min(new[u], new[v]), max(new[u], new[v])) for u, v in edges))


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: Tuple[Tuple[int, int], ...]) -> IntPoly:
    if not edges:
        return IntPoly([0] * n + [1])
    (u, v), rest = edges[0], edges[1:]
    deleted = _chromatic(*_canonical(n, frozenset(rest)))
    # contract v into u, then shift labels above v down by one
    merged = set()
    for a, b in rest:
        a, b = (u if a == v else a), (u if b == v else b)
        if a != b:
            a, b = (a - (a > v)), (b - (b > v))
            merged.add((min(a, b), max(a, b)))
    contracted = _chromatic(*_canonical(n - 1, frozenset(merged)))
    return deleted + contracted * IntPoly([-1])


def chromatic_polynomial(G: SimpleGraph) -> IntPoly:
    """Chromatic polynomial by deletion-contraction."""
    return _chromatic(*_canonical(G.n, G.edges))


def toric_graphical_region_count(G: SimpleGraph) -> int:
    """Regions of the toric graphical arrangement: (-1)^(n-k) [t^k] chi_G for k components.

    For connected graphs this is also cross-checked against the region count
    of the essential arrangement obtained by adding x_v = 0.
    """
    k = len(G.components())
    count = (-1) ** (G.n - k) * chromatic_polynomial(G).coefficient(k)
    if k == 1 and G.n > 1:
        pinned = toric_region_count(pinned_toric_arrangement(G))
        if pinned != count:
            raise AssertionError(f"pinned arrangement has {pinned} regions, expected {count}")
    return count


def _orientations(G: SimpleGraph):
    E = G.sorted_edges()
    for bits in range(1 << len(E)):
        yield [(u, v) if (bits >> i) & 1 else (v, u) for i, (u, v) in enumerate(E)]


def _is_acyclic(n: int, arcs: Sequence[Tuple[int, int]]) -> bool:
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    stack = [x for x in range(n) if indeg[x] == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen == n


def acyclic_orientations(G: SimpleGraph) -> int:
    """Exhaustive count of acyclic orientations."""
    return sum(1 for arcs in _orientations(G) if _is_acyclic(G.n, arcs))


@lru_cache(maxsize=256)
def _unique_sink_tally(G: SimpleGraph) -> Tuple[int, ...]:
    # one pass over all orientations, counting acyclic ones by their sole sink
    tally = [0] * G.n
    for arcs in _orientations(G):
        if not _is_acyclic(G.n, arcs):
            continue
        has_out = [False] * G.n
        for a, _ in arcs:
            has_out[a] = True
        sinks = [x for x in range(G.n) if not has_out[x]]
        if len(sinks) == 1:
            tally[sinks[0]] += 1
    return tuple(tally)


def unique_sink_acyclic_orientations(G: SimpleGraph, v: int) -> int:
    """Exhaustive count of acyclic orientations whose only sink is ``v``."""
    if not G.is_connected():
        raise GraphError("graph is not connected")
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} is outside 0..{G.n - 1}")
    return _unique_sink_tally(G)[v]
