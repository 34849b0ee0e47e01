"""Brute-force reference computations.

These are deliberately naive and avoid the code paths they are used to
check: chains are enumerated one by one, fibers are counted chain by chain and
toric components are found by flood fill on a grid of rational points.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from .arrangement_euclid import AffineArrangement, Face, Flat, faces
from .arrangement_toric import ToricArrangement, ToricSubspace
from .ncpoly import AbPoly
from .poset import GradedPoset

__all__ = [
    "OracleLimitError",
    "all_chains",
    "ab_index_by_chains",
    "chains_ending_at_top",
    "z_fiber_counts",
    "z_fiber_count",
    "zero_map_faces",
    "grid_points",
    "grid_census",
    "grid_component_count",
    "region_census",
]

MAX_POSET = 5000
MAX_Q = 60
MAX_HYPERPLANES = 10


class OracleLimitError(ValueError):
    """Instance exceeds the size caps of the brute-force oracles."""


def _check_poset(P: GradedPoset) -> None:
    if len(P) > MAX_POSET:
        raise OracleLimitError(f"poset has {len(P)} elements, oracle limit is {MAX_POSET}")


def all_chains(P: GradedPoset) -> Iterator[Tuple[int, ...]]:
    """Every chain 0̂ = x0 < x1 < ... < xk = 1̂, found by walking the order relation."""
    _check_poset(P)
    above = {x: [y for y in P.elements() if y != x and P.leq(x, y)] for x in P.elements()}
    stack = [(P.bottom,)]
    while stack:
        c = stack.pop()
        if c[-1] == P.top:
            yield c
            continue
        for y in above[c[-1]]:
            stack.append(c + (y,))


def ab_index_by_chains(P: GradedPoset) -> AbPoly:
    """Sum of the weights of all chains, each expanded word by word."""
    total: Dict[str, int] = {}
    for c in all_chains(P):
        gaps = [P.ranks[c[i + 1]] - P.ranks[c[i]] for i in range(len(c) - 1)]
        # (a-b)^(g-1) expands to sum over words of (-1)^(#b)
        blocks = []
        for g in gaps:
            blocks.append([(w, (-1) ** w.count("b")) for w in map("".join, itertools.product("ab", repeat=g - 1))])
        for pieces in itertools.product(*blocks):
            word = "b".join(w for w, _ in pieces)
            sign = 1
            for _, s in pieces:
                sign *= s
            total[word] = total.get(word, 0) + sign
    return AbPoly(total)


def chains_ending_at_top(L: GradedPoset) -> Iterator[Tuple[int, ...]]:
    """Chains x1 < ... < xk = 1̂ of L starting anywhere (the adjoined 0̂ left implicit)."""
    below = {y: [x for x in L.elements() if x != y and L.leq(x, y)] for y in L.elements()}
    stack = [(L.top,)]
    while stack:
        c = stack.pop()
        yield c
        for x in below[c[0]]:
            stack.append((x,) + c)


def z_fiber_counts(D: GradedPoset, zmap: Dict[int, Optional[int]]) -> Counter:
    """Number of chains of D over each image chain.

    ``zmap`` sends D's elements to the target; D's bottom must map to None
    (the adjoined minimum), and is dropped from the image.
    """
    counts: Counter = Counter()
    for c in all_chains(D):
        counts[tuple(zmap[y] for y in c[1:])] += 1
    return counts


def z_fiber_count(D: GradedPoset, zmap: Dict[int, Optional[int]], chain: Sequence[int]) -> int:
    return z_fiber_counts(D, zmap).get(tuple(chain), 0)


def zero_map_faces(A: AffineArrangement, D: GradedPoset, L: GradedPoset) -> Dict[int, Optional[int]]:
    """Affine hull map from a face poset (any orientation) to the intersection lattice.

    Faces go to their affine hull; the empty face ``"∅"`` goes to the top of L
    and the abstract top ``"1̂"`` of the face lattice goes to None.
    """
    hulls = {F: i for i, F in enumerate(L.labels)}
    out: Dict[int, Optional[int]] = {}
    for x, lab in enumerate(D.labels):
        if isinstance(lab, Face):
            eqs = [a + (b,) for (a, b), s in zip(A.hyperplanes, lab.signs) if s == 0]
            out[x] = hulls[Flat.from_equations(A.n, eqs)]
        elif lab == "∅":
            out[x] = L.top
        else:
            out[x] = None
    return out


# ---------------------------------------------------------------------------
# grids on the torus


def grid_points(n: int, q: int) -> Iterator[Tuple[int, ...]]:
    if q > MAX_Q:
        raise OracleLimitError(f"q = {q} exceeds the oracle limit {MAX_Q}")
    return itertools.product(range(q), repeat=n)


def _on(S: ToricSubspace, k: Sequence[int], q: int) -> bool:
    return S.contains_point([Fraction(x, q) for x in k])


def _on_hyperplane(normal, offset: Fraction, k, q) -> bool:
    return (Fraction(sum(a * x for a, x in zip(normal, k)), q) - offset).denominator == 1


def grid_component_count(subspaces: Sequence[ToricSubspace], q: int) -> int:
    """Connected pieces of the intersection, seen on the grid (1/q Z)^n / Z^n.

    Two grid points are joined when they differ by v / q (mod 1) for an
    integer v that every constraint annihilates.  The box searched for v is
    wide enough to hold q e_i and a reduced basis of the kernel lattice.
    """
    n = subspaces[0].n
    rows = [r for S in subspaces for r in (S.basis or ())]
    pts = [k for k in grid_points(n, q) if all(_on(S, k, q) for S in subspaces)]
    if not pts:
        return 0
    M = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    bound = max(q, n * int(np.abs(M).max(initial=1)))
    box = np.indices((2 * bound + 1,) * n).reshape(n, -1).T - bound
    steps = {tuple(int(x) % q for x in v) for v in box[~np.any(box @ M.T, axis=1)]}
    steps.discard((0,) * n)
    index = {k: i for i, k in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in pts:
        for v in steps:
            j = index.get(tuple((a + b) % q for a, b in zip(k, v)))
            if j is not None:
                parent[find(index[k])] = find(j)
    return len({find(i) for i in range(len(pts))})


def grid_census(A: ToricArrangement, q: int, subset: Optional[Sequence[int]] = None) -> Tuple[int, int]:
    """(grid points on no hyperplane, pieces of the intersection of the chosen hyperplanes).

    ``subset`` selects hyperplanes by index, default all of them.
    """
    if len(A) > MAX_HYPERPLANES:
        raise OracleLimitError(f"{len(A)} hyperplanes exceed the oracle limit {MAX_HYPERPLANES}")
    off = sum(
        1 for k in grid_points(A.n, q)
        if not any(_on_hyperplane(H.normal, H.offset, k, q) for H in A.hyperplanes)
    )
    chosen = [A.hyperplanes[i] for i in (range(len(A)) if subset is None else subset)]
    if not chosen:
        return off, 1
    return off, grid_component_count([H.subspace() for H in chosen], q)


def region_census(A: AffineArrangement) -> Tuple[int, int]:
    """(regions, bounded regions) by sign-vector enumeration."""
    top = [f for f in faces(A) if f.dim == A.n]
    return len(top), sum(1 for f in top if f.bounded)
