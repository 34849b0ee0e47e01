"""Finite graded posets: Möbius function, flag vectors and the ab-index.

A :class:`GradedPoset` is stored as a cover relation on the integers
``0..N-1`` with an explicit rank function.  The order relation is materialised
once as a boolean matrix; everything else is derived from it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .ncpoly import (
    AbPoly,
    B,
    CdPoly,
    NotCdExpressible,
    a_minus_b_power,
    ab_to_cd,
    c_power,
    cd_expand,
    coproduct_k,
)

__all__ = [
    "GradedPoset",
    "PosetError",
    "FlagVector",
    "Zaslavsky",
    "ManifoldDecomposition",
    "moebius",
    "zaslavsky_invariants",
    "flag_vectors",
    "ab_index",
    "ab_index_chain",
    "ab_index_stanley",
    "ab_index_flag",
    "rank_selection",
    "dual",
    "interval",
    "adjoin_bottom",
    "is_eulerian",
    "euler_characteristic",
    "manifold_decomposition",
    "decompose_manifold_psi",
    "projective_quotient_psi",
    "coalgebra_chain_identity_check",
    "chains",
    "chain_poset",
    "boolean_lattice",
    "butterfly",
    "polytope_face_lattice",
    "random_graded_poset",
]


class PosetError(ValueError):
    """Invalid poset data or an invalid request on a poset."""


class GradedPoset:
    """Finite poset with a unique minimum, a unique maximum and a rank function.

    Args:
        ranks: rank of each element; element ``i`` has rank ``ranks[i]``.
        covers: pairs ``(x, y)`` with ``x`` covered by ``y``.
        labels: optional payload per element (flats, faces, ...).
        consecutive: if true (the default) every cover must raise the rank by
            exactly one.  Posets with a prescribed non-standard grading, such as
            the poset of unbounded faces, pass ``False``; covers then only need
            to raise the rank.
    """

    def __init__(
        self,
        ranks: Sequence[int],
        covers: Iterable[Tuple[int, int]],
        labels: Optional[Sequence] = None,
        consecutive: bool = True,
    ):
        self.ranks: Tuple[int, ...] = tuple(int(r) for r in ranks)
        n = len(self.ranks)
        if n < 2:
            raise PosetError("a graded poset needs distinct 0̂ and 1̂")
        self.covers: Tuple[Tuple[int, int], ...] = tuple(sorted({(int(x), int(y)) for x, y in covers}))
        self.labels = list(labels) if labels is not None else list(range(n))
        if len(self.labels) != n:
            raise PosetError("one label per element expected")
        self.consecutive = consecutive
        self._up: List[List[int]] = [[] for _ in range(n)]
        self._down: List[List[int]] = [[] for _ in range(n)]
        for x, y in self.covers:
            if not (0 <= x < n and 0 <= y < n):
                raise PosetError(f"cover {x} < {y} names an unknown element")
            d = self.ranks[y] - self.ranks[x]
            if d < 1 or (consecutive and d != 1):
                raise PosetError(
                    f"cover {x} < {y} goes from rank {self.ranks[x]} to rank {self.ranks[y]}"
                )
            self._up[x].append(y)
            self._down[y].append(x)
        bottoms = [i for i in range(n) if not self._down[i]]
        tops = [i for i in range(n) if not self._up[i]]
        if len(bottoms) != 1:
            raise PosetError(f"expected a unique minimal element, found {bottoms}")
        if len(tops) != 1:
            raise PosetError(f"expected a unique maximal element, found {tops}")
        self.bottom, self.top = bottoms[0], tops[0]
        if self.ranks[self.bottom] != 0:
            raise PosetError("the minimum must have rank 0")
        self.order = sorted(range(n), key=lambda i: (self.ranks[i], i))

    def __len__(self):
        return len(self.ranks)

    def __repr__(self):
        return f"GradedPoset(n={len(self)}, rank={self.rank})"

    @property
    def rank(self) -> int:
        """Rank of 1̂."""
        return self.ranks[self.top]

    def elements(self) -> range:
        return range(len(self))

    def of_rank(self, r: int) -> List[int]:
        return [i for i in self.order if self.ranks[i] == r]

    def upper_covers(self, x: int) -> List[int]:
        return list(self._up[x])

    def lower_covers(self, x: int) -> List[int]:
        return list(self._down[x])

    def coatoms(self) -> List[int]:
        return sorted(self._down[self.top])

    def atoms(self) -> List[int]:
        return sorted(self._up[self.bottom])

    @cached_property
    def le_matrix(self) -> np.ndarray:
        """Boolean matrix with ``M[x, y]`` true iff ``x <= y``."""
        n = len(self)
        M = np.zeros((n, n), dtype=bool)
        for y in self.order:
            M[y, y] = True
            for x in self._down[y]:
                M[:, y] |= M[:, x]
        return M

    def leq(self, x: int, y: int) -> bool:
        return bool(self.le_matrix[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.le_matrix[x, y])

    def index(self, label) -> int:
        return self.labels.index(label)

    @cached_property
    def mobius_matrix(self) -> np.ndarray:
        """All values ``mu(x, y)``; zero where ``x`` is not below ``y``."""
        n = len(self)
        le = self.le_matrix.astype(np.int64)
        strict = le.copy()
        np.fill_diagonal(strict, 0)
        mu = np.zeros((n, n), dtype=np.int64)
        layers: Dict[int, List[int]] = {}
        for i in self.order:
            layers.setdefault(self.ranks[i], []).append(i)
        for x in range(n):
            row = np.zeros(n, dtype=np.int64)
            row[x] = 1
            for r in sorted(layers):
                if r <= self.ranks[x]:
                    continue
                ys = [y for y in layers[r] if le[x, y]]
                if ys:
                    # mu(x, y) = -sum_{x <= z < y} mu(x, z)
                    row[ys] = -(strict[:, ys].T @ row)
            mu[x] = row
        return mu


def moebius(P: GradedPoset, x: int, y: int) -> int:
    """Möbius function ``mu(x, y)`` of ``P``.

    Raises:
        PosetError: if ``x`` is not below ``y``.
    """
    if not P.leq(x, y):
        raise PosetError(f"elements {x} and {y} are not comparable as x <= y")
    return int(P.mobius_matrix[x, y])


class Zaslavsky(NamedTuple):
    Z: int
    Zb: int
    Zt: int
    Zub: int


def zaslavsky_invariants(P: GradedPoset) -> Zaslavsky:
    """The invariants Z, Z_b, Z_t and Z_ub = Z - 2 Z_b of ``P``."""
    mu0 = P.mobius_matrix[P.bottom]
    Z = sum((-1) ** P.ranks[x] * int(mu0[x]) for x in P.elements())
    Zb = (-1) ** P.rank * int(mu0[P.top])
    Zt = (-1) ** (P.rank - 1) * sum(int(mu0[x]) for x in P.coatoms())
    return Zaslavsky(Z, Zb, Zt, Z - 2 * Zb)


# ---------------------------------------------------------------------------
# flag vectors


def _subsets(n: int) -> Iterator[FrozenSet[int]]:
    for k in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), k):
            yield frozenset(S)


def u_word(S: Iterable[int], n: int) -> str:
    """The ab-monomial with b exactly at the positions in ``S``."""
    S = set(S)
    return "".join("b" if i in S else "a" for i in range(1, n + 1))


@dataclass(frozen=True)
class FlagVector:
    """Flag f- and h-vectors of a poset of rank ``rank``."""

    rank: int
    f: Dict[FrozenSet[int], int] = field(repr=False)
    h: Dict[FrozenSet[int], int] = field(repr=False)

    def f_of(self, *S: int) -> int:
        return self.f[frozenset(S)]

    def h_of(self, *S: int) -> int:
        return self.h[frozenset(S)]

    def ab_index(self) -> AbPoly:
        n = self.rank - 1
        return AbPoly({u_word(S, n): h for S, h in self.h.items()})

    def table(self) -> List[Tuple[Tuple[int, ...], int, int]]:
        """Rows ``(S, f_S, h_S)`` ordered like the u_S in graded colex order."""
        n = self.rank - 1
        rows = [(tuple(sorted(S)), self.f[S], self.h[S]) for S in self.f]
        return sorted(rows, key=lambda r: u_word(r[0], n)[::-1])


def flag_vectors(P: GradedPoset) -> FlagVector:
    """Flag f-vector by a chain count over rank layers, h by inclusion-exclusion."""
    n = P.rank - 1
    le = P.le_matrix.astype(np.int64)
    np.fill_diagonal(le, 0)
    f: Dict[FrozenSet[int], int] = {}
    for S in _subsets(n):
        vec = np.zeros(len(P), dtype=np.int64)
        vec[P.bottom] = 1
        for s in sorted(S):
            mask = np.array([P.ranks[y] == s for y in P.elements()])
            vec = np.where(mask, le.T @ vec, 0)
        f[S] = int(vec.sum()) if S else 1
    h = {S: sum((-1) ** (len(S) - len(T)) * f[T] for T in _subsets(n) if T <= S) for S in f}
    return FlagVector(P.rank, f, h)


# ---------------------------------------------------------------------------
# ab-index


def _chain_weights_from(P: GradedPoset, x: int) -> Dict[int, AbPoly]:
    # W(y) = sum over chains x = x0 < x1 < ... < xj = y of their weights.
    W: Dict[int, AbPoly] = {}
    rx = P.ranks[x]
    le = P.le_matrix
    for y in P.order:
        if y == x or not le[x, y]:
            continue
        ry = P.ranks[y]
        total = a_minus_b_power(ry - rx - 1)
        by_rank: Dict[int, AbPoly] = {}
        for z, wz in W.items():
            if le[z, y] and z != y:
                r = P.ranks[z]
                by_rank[r] = by_rank.get(r, AbPoly()) + wz
        for r, s in by_rank.items():
            total = total + s * B * a_minus_b_power(ry - r - 1)
        W[y] = total
    return W


def ab_index_chain(P: GradedPoset) -> AbPoly:
    """Sum of chain weights (a-b)^(r1-1) b (a-b)^(r2-1) b ... over all chains 0̂ < ... < 1̂."""
    return _chain_weights_from(P, P.bottom)[P.top]


def ab_index_stanley(P: GradedPoset) -> AbPoly:
    """Stanley's recursion over the upper intervals [x, 1̂]."""
    top = P.top
    rt = P.rank
    le = P.le_matrix
    U: Dict[int, AbPoly] = {}
    for x in reversed(P.order):
        if x == top:
            continue
        rx = P.ranks[x]
        total = a_minus_b_power(rt - rx - 1)
        for y, uy in U.items():
            if y != x and le[x, y]:
                total = total + a_minus_b_power(P.ranks[y] - rx - 1) * B * uy
        U[x] = total
    return U[P.bottom]


def ab_index_flag(P: GradedPoset) -> AbPoly:
    """sum_S h_S u_S."""
    return flag_vectors(P).ab_index()


def ab_index(P: GradedPoset, via: str = "chains") -> AbPoly:
    if via in ("chains", "chain"):
        return ab_index_chain(P)
    if via == "stanley":
        return ab_index_stanley(P)
    if via in ("flag_h", "flag"):
        return ab_index_flag(P)
    raise ValueError(f"unknown ab-index method {via!r}")


def interval_ab_indices(P: GradedPoset) -> Dict[Tuple[int, int], AbPoly]:
    """Psi([x, y]) for every pair x < y."""
    out = {}
    for x in P.elements():
        for y, w in _chain_weights_from(P, x).items():
            out[(x, y)] = w
    return out


# ---------------------------------------------------------------------------
# constructions


def _induced(P: GradedPoset, keep: Sequence[int], ranks: Sequence[int], consecutive=True) -> GradedPoset:
    # subposet on ``keep`` (in that order) with the given ranks; covers are
    # recomputed from the inherited order
    pos = {x: i for i, x in enumerate(keep)}
    le = P.le_matrix
    covers = []
    for x in keep:
        above = [y for y in keep if y != x and le[x, y]]
        for y in above:
            if not any(z != y and le[z, y] for z in above):
                covers.append((pos[x], pos[y]))
    return GradedPoset(ranks, covers, [P.labels[x] for x in keep], consecutive=consecutive)


def rank_selection(P: GradedPoset, S: Iterable[int]) -> GradedPoset:
    """The rank-selected poset P(S), regraded so that its ranks are consecutive."""
    S = sorted(set(S))
    if any(s < 1 or s > P.rank - 1 for s in S):
        raise PosetError(f"rank set {S} is not inside [1, {P.rank - 1}]")
    newrank = {s: i + 1 for i, s in enumerate(S)}
    keep = [P.bottom] + [x for x in P.order if P.ranks[x] in newrank] + [P.top]
    ranks = [0] + [newrank[P.ranks[x]] for x in keep[1:-1]] + [len(S) + 1]
    return _induced(P, keep, ranks)


def dual(P: GradedPoset) -> GradedPoset:
    """Same elements, order reversed, rank rho(P) - rho(x)."""
    return GradedPoset(
        [P.rank - r for r in P.ranks],
        [(y, x) for x, y in P.covers],
        P.labels,
        consecutive=P.consecutive,
    )


def interval(P: GradedPoset, x: int, y: int) -> GradedPoset:
    """The closed interval [x, y] as a graded poset."""
    if not P.leq(x, y) or x == y:
        raise PosetError(f"[{x}, {y}] is not a nontrivial interval")
    le = P.le_matrix
    keep = [z for z in P.order if le[x, z] and le[z, y]]
    return _induced(P, keep, [P.ranks[z] - P.ranks[x] for z in keep], consecutive=P.consecutive)


def adjoin_bottom(P: GradedPoset, label="0̂") -> GradedPoset:
    """P with a new minimum below the old one; the new element gets index len(P)."""
    n = len(P)
    return GradedPoset(
        [r + 1 for r in P.ranks] + [0],
        list(P.covers) + [(n, P.bottom)],
        P.labels + [label],
        consecutive=P.consecutive,
    )


def is_eulerian(P: GradedPoset) -> bool:
    """True iff mu(x, y) = (-1)^(rho(y) - rho(x)) for all x <= y."""
    r = np.array(P.ranks)
    sign = np.where((r[None, :] - r[:, None]) % 2 == 0, 1, -1)
    le = P.le_matrix
    return bool(np.all(P.mobius_matrix[le] == sign[le]))


def euler_characteristic(P: GradedPoset) -> int:
    """mu(P) + 1, the Euler characteristic of the complex with face poset P."""
    return int(P.mobius_matrix[P.bottom, P.top]) + 1


class ManifoldDecomposition(NamedTuple):
    c1: Fraction
    c2: Fraction
    Phi: CdPoly


def decompose_manifold_psi(psi: AbPoly, euler_char: int) -> ManifoldDecomposition:
    """Split psi = c1 (a-b)^(n+1) + c2 c^(n+1) + Phi with c1 = 1 - chi/2, c2 = chi/2.

    Raises:
        NotCdExpressible: if the remainder has no cd-form, or contains c^(n+1).
    """
    m = psi.degree()
    c1 = Fraction(2 - euler_char, 2)
    c2 = Fraction(euler_char, 2)
    twice = psi * 2 - a_minus_b_power(m) * (2 - euler_char) - c_power(m) * euler_char
    twice_cd = ab_to_cd(twice)
    if twice_cd.coefficient("c" * m):
        raise NotCdExpressible(twice)
    odd = [w for w, c in twice_cd.terms().items() if c % 2]
    if odd:
        raise NotCdExpressible(twice)
    Phi = CdPoly({w: c // 2 for w, c in twice_cd.terms().items()})
    return ManifoldDecomposition(c1, c2, Phi)


def manifold_decomposition(P: GradedPoset, euler_char: int) -> ManifoldDecomposition:
    """Decompose the ab-index of the face poset of a regular cell manifold.

    The regularity of the complex is the caller's responsibility; the proper
    intervals must be Eulerian.
    """
    for x in P.elements():
        for y in P.elements():
            if (x, y) != (P.bottom, P.top) and P.lt(x, y):
                if P.mobius_matrix[x, y] != (-1) ** (P.ranks[y] - P.ranks[x]):
                    raise PosetError(f"proper interval [{x}, {y}] is not Eulerian")
    return decompose_manifold_psi(ab_index_chain(P), euler_char)


def projective_quotient_psi(psi_sphere: CdPoly, n: int) -> AbPoly:
    """ab-index of the antipodal quotient of a centrally symmetric sphere subdivision.

    ``psi_sphere = c^(n+1) + Phi`` is the cd-index of the sphere; the quotient has
    ab-index ``(c^(n+1) + (a-b)^(n+1)) / 2 + Phi / 2``.
    """
    Phi = psi_sphere - CdPoly.monomial("c" * (n + 1))
    if Phi.coefficient("c" * (n + 1)):
        raise ValueError("cd-index does not start with c^(n+1)")
    odd = {w: c for w, c in Phi.terms().items() if c % 2}
    if odd:
        raise ValueError(f"odd coefficients {CdPoly(odd)}: subdivision is not centrally symmetric")
    base = c_power(n + 1) + a_minus_b_power(n + 1)
    half_base = AbPoly({w: c // 2 for w, c in base.terms().items()})
    half_phi = CdPoly({w: c // 2 for w, c in Phi.terms().items()})
    return half_base + cd_expand(half_phi)


# ---------------------------------------------------------------------------
# chains and the coalgebra identity


def chains(P: GradedPoset, length: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Chains 0̂ = x0 < x1 < ... < xk = 1̂, optionally only those with k = length."""
    le = P.le_matrix
    order = P.order

    def extend(prefix):
        last = prefix[-1]
        if last == P.top:
            if length is None or len(prefix) - 1 == length:
                yield tuple(prefix)
            return
        if length is not None and len(prefix) - 1 >= length:
            return
        for y in order:
            if y != last and le[last, y]:
                yield from extend(prefix + [y])

    yield from extend([P.bottom])


def coalgebra_chain_identity_check(
    P: GradedPoset, M: Callable[..., object], k: int
) -> bool:
    """Compare both sides of the chain/coproduct identity for a k-multilinear ``M``.

    Left: sum over chains of length k of ``M(Psi[x0,x1], ..., Psi[x(k-1),xk])``.
    Right: sum over the k-ary coproduct of ``Psi(P)`` of ``M(w1, ..., wk)``.
    """
    psi = interval_ab_indices(P)
    lhs = 0
    for c in chains(P, k):
        lhs = lhs + M(*[psi[(c[i], c[i + 1])] for i in range(k)])
    rhs = coproduct_k(psi[(P.bottom, P.top)], k).apply(M, zero=0)
    return lhs == rhs


# ---------------------------------------------------------------------------
# standard posets


def chain_poset(k: int) -> GradedPoset:
    """Chain of rank k."""
    return GradedPoset(range(k + 1), [(i, i + 1) for i in range(k)])


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of {1..n} ordered by inclusion."""
    subsets = [frozenset(S) for k in range(n + 1) for S in itertools.combinations(range(1, n + 1), k)]
    pos = {S: i for i, S in enumerate(subsets)}
    covers = [(pos[S], pos[S | {j}]) for S in subsets for j in range(1, n + 1) if j not in S]
    return GradedPoset([len(S) for S in subsets], covers, subsets)


def butterfly(k: int) -> GradedPoset:
    """Rank-k poset with two elements of each rank 1..k-1, all adjacent ranks related."""
    ranks = [0]
    covers = []
    prev = [0]
    for r in range(1, k):
        cur = [len(ranks), len(ranks) + 1]
        ranks += [r, r]
        covers += [(x, y) for x in prev for y in cur]
        prev = cur
    top = len(ranks)
    ranks.append(k)
    covers += [(x, top) for x in prev]
    return GradedPoset(ranks, covers)


def polytope_face_lattice(facets: Iterable[Iterable]) -> GradedPoset:
    """Face lattice of a polytope from the vertex sets of its facets.

    Faces are all intersections of facets; the empty face is 0̂ and the whole
    polytope is 1̂.  Ranks are dimension + 1.
    """
    facets = [frozenset(F) for F in facets]
    whole = frozenset().union(*facets)
    faces = {whole}
    frontier = set(facets)
    while frontier:
        faces |= frontier
        frontier = {F & G for F in frontier for G in facets} - faces
    faces.add(frozenset())
    faces = sorted(faces, key=lambda F: (len(F), sorted(map(str, F))))
    # rank by longest chain from the empty face
    rank = {}
    for F in faces:
        below = [G for G in faces if G < F]
        rank[F] = 1 + max((rank[G] for G in below), default=-1)
    pos = {F: i for i, F in enumerate(faces)}
    covers = []
    for F in faces:
        for G in faces:
            if F < G and rank[G] == rank[F] + 1:
                covers.append((pos[F], pos[G]))
    return GradedPoset([rank[F] for F in faces], covers, faces)


def random_graded_poset(seed: int, max_rank: int = 5, max_width: int = 3) -> GradedPoset:
    """Random graded poset of rank 1..max_rank built layer by layer.

    Every element covers a random nonempty subset of the layer below and every
    element gets at least one upper cover, so the result is always valid.
    """
    rng = random.Random(seed)
    rank = rng.randint(1, max_rank)
    ranks = [0]
    layers = [[0]]
    covers = []
    for r in range(1, rank):
        layer = []
        for _ in range(rng.randint(1, max_width)):
            y = len(ranks)
            ranks.append(r)
            below = layers[-1]
            chosen = [x for x in below if rng.random() < 0.6] or [rng.choice(below)]
            covers += [(x, y) for x in chosen]
            layer.append(y)
        for x in layers[-1]:
            if not any(a == x for a, _ in covers):
                covers.append((x, rng.choice(layer)))
        layers.append(layer)
    top = len(ranks)
    ranks.append(rank)
    covers += [(x, top) for x in layers[-1]]
    return GradedPoset(ranks, covers)
