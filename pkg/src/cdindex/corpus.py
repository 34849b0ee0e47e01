"""Seeded random instances: arrangements and graphs for tests and demos."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional

from .arrangement_euclid import AffineArrangement, ArrangementError
from .arrangement_toric import ToricArrangement, ToricError, ToricHyperplane
from .graphs import SimpleGraph

__all__ = ["random_affine_arrangement", "random_toric_arrangement", "random_graph"]

_OFFSETS = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)]
_TORIC_OFFSETS = [Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(2, 3)]


def random_affine_arrangement(
    seed: int, max_dim: int = 3, max_hyperplanes: int = 7, central: Optional[bool] = None
) -> AffineArrangement:
    """An essential arrangement with small integer normals.

    ``central=True`` forces all offsets to zero; ``False`` forces a
    non-central result; ``None`` leaves it to chance.
    """
    rng = random.Random(seed)
    while True:
        n = rng.randint(1, max_dim)
        m = rng.randint(n, max(n, max_hyperplanes))
        normals, offsets = [], []
        for _ in range(m):
            a = [rng.randint(-2, 2) for _ in range(n)]
            if not any(a):
                a[rng.randrange(n)] = 1
            normals.append(a)
            offsets.append(Fraction(0) if central else rng.choice(_OFFSETS))
        try:
            A = AffineArrangement(normals, offsets, n)
        except ArrangementError:
            continue
        if not A.is_essential():
            continue
        if central is False and A.is_central():
            continue
        return A


def random_toric_arrangement(seed: int, n: int = 2, max_hyperplanes: int = 4) -> ToricArrangement:
    """An essential rational toric arrangement with small normals."""
    rng = random.Random(seed)
    while True:
        m = rng.randint(n, max_hyperplanes)
        hyper = set()
        for _ in range(m):
            a = [rng.randint(-3, 3) for _ in range(n)]
            if not any(a):
                a[rng.randrange(n)] = 1
            hyper.add(ToricHyperplane.make(a, rng.choice(_TORIC_OFFSETS)))
        try:
            A = ToricArrangement(sorted(hyper), n)
        except ToricError:
            continue
        if A.is_essential():
            return A


def random_graph(seed: int, max_vertices: int = 6, connected: bool = True) -> SimpleGraph:
    """Random simple graph; connected ones contain a random spanning tree."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((rng.randrange(v), v))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.35:
            edges.add((u, v))
    return SimpleGraph.make(n, edges)
