"""Rational toric hyperplane arrangements on the torus T^n = R^n / Z^n.

A toric subspace is stored as ``{x : B x = c (mod 1)}`` where the rows of
``B`` are the Hermite basis of a saturated lattice.  Saturation makes the set
connected, and the Hermite basis makes the representation canonical.
Intersections split into several such pieces; they are found from the Smith
normal form of the stacked constraints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .intpoly import IntPoly
from .ncpoly import A as A_LETTER
from .ncpoly import B as B_LETTER
from .ncpoly import AbPoly, CdPoly, a_minus_b_power, h_prime, omega, phi_t
from .poset import (
    GradedPoset,
    PosetError,
    ab_index,
    adjoin_bottom,
    flag_vectors,
    interval,
    zaslavsky_invariants,
)

__all__ = [
    "ToricHyperplane",
    "ToricSubspace",
    "ToricArrangement",
    "ToricError",
    "ToricSubdivision",
    "intersect_components",
    "intersection_poset",
    "toric_characteristic_polynomial",
    "n_of_arrangement",
    "chi_by_lattice_points",
    "toric_region_count",
    "toric_face_poset_2d",
    "zero_map_2d",
    "is_alternating",
    "default_q",
    "psi_toric",
    "fiber_cardinality_toric",
    "toric_f_vector",
]


class ToricError(ValueError):
    """Invalid toric data or a violated precondition."""


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


@dataclass(frozen=True, order=True)
class ToricHyperplane:
    """The image of ``normal . x = offset`` in T^n, in canonical form.

    The normal is primitive with a positive leading entry and the offset lies
    in ``[0, 1)``.  Use :meth:`make` to normalise arbitrary input.
    """

    normal: Tuple[int, ...]
    offset: Fraction

    @classmethod
    def make(cls, normal: Sequence[int], offset=0) -> "ToricHyperplane":
        if not any(normal):
            raise ToricError("toric hyperplane needs a nonzero normal")
        vec, g = linalg.primitive(normal)
        b = Fraction(offset) / g
        if next(x for x in vec if x) < 0:
            vec, b = tuple(-x for x in vec), -b
        return cls(vec, _frac(b))

    @property
    def n(self) -> int:
        return len(self.normal)

    def integral_form(self) -> Tuple[Tuple[int, ...], int]:
        """Smallest integer multiple ``(a, b)`` of the equation with integer ``b``."""
        d = self.offset.denominator
        return tuple(d * x for x in self.normal), int(self.offset * d)

    def subspace(self) -> "ToricSubspace":
        return ToricSubspace(self.n, (self.normal,), (self.offset,))

    def __str__(self):
        lhs = linalg.format_linear(self.normal)
        return f"{lhs} = {self.offset}"


@dataclass(frozen=True)
class ToricSubspace:
    """Connected toric subspace ``{x in T^n : basis . x = offset (mod 1)}``.

    ``basis`` is the Hermite basis of a saturated lattice; ``offset`` has
    entries in ``[0, 1)``.  ``basis is None`` encodes the empty set.
    """

    n: int
    basis: Optional[Tuple[Tuple[int, ...], ...]]
    offset: Tuple[Fraction, ...] = ()

    @classmethod
    def whole(cls, n: int) -> "ToricSubspace":
        return cls(n, (), ())

    @classmethod
    def empty(cls, n: int) -> "ToricSubspace":
        return cls(n, None, ())

    @classmethod
    def from_saturated(cls, n: int, rows, offsets) -> "ToricSubspace":
        """Canonical form of ``{rows . x = offsets}`` when the rows span a saturated lattice."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls.whole(n)
        H, K = linalg.hermite_normal_form(rows)
        k = sum(1 for r in H if any(r))
        off = [_frac(sum(Fraction(K[i][j]) * offsets[j] for j in range(len(rows)))) for i in range(k)]
        return cls(n, tuple(tuple(r) for r in H[:k]), tuple(off))

    @property
    def is_empty(self) -> bool:
        return self.basis is None

    @property
    def dim(self) -> int:
        return -1 if self.basis is None else self.n - len(self.basis)

    @property
    def codim(self) -> int:
        return self.n + 1 if self.basis is None else len(self.basis)

    def sort_key(self):
        return (self.codim, self.basis or (), self.offset)

    def point(self) -> Tuple[Fraction, ...]:
        """A rational point of the subspace, reduced into [0, 1)^n."""
        if self.basis is None:
            raise ToricError("the empty set has no points")
        x0, _ = linalg.solve_affine(list(zip(self.basis, self.offset)), self.n)
        return tuple(_frac(x) for x in x0)

    def contains_point(self, p: Sequence) -> bool:
        if self.basis is None:
            return False
        return all(
            (sum(a * Fraction(x) for a, x in zip(row, p)) - c).denominator == 1
            for row, c in zip(self.basis, self.offset)
        )

    def contains(self, other: "ToricSubspace") -> bool:
        """True iff ``other`` is a subset of this subspace."""
        if other.basis is None:
            return True
        if self.basis is None:
            return False
        # every character fixed on self must be fixed on other ...
        if linalg.rank(list(other.basis) + list(self.basis)) != len(other.basis):
            return False
        # ... and then it is constant on other, so one point decides
        return self.contains_point(other.point())

    def __str__(self):
        if self.basis is None:
            return "∅"
        if not self.basis:
            return f"T^{self.n}"
        eqs = []
        for row, c in zip(self.basis, self.offset):
            lhs = linalg.format_linear(row)
            eqs.append(f"{lhs} = {c}")
        return "{" + ", ".join(eqs) + "}"


def intersect_components(subspaces: Sequence[ToricSubspace]) -> List[ToricSubspace]:
    """Connected components of the intersection of toric subspaces.

    Returns the empty list when the intersection is empty.
    """
    if not subspaces:
        raise ToricError("need at least one subspace")
    n = subspaces[0].n
    if any(S.n != n for S in subspaces):
        raise ToricError("subspaces live in tori of different dimensions")
    if any(S.is_empty for S in subspaces):
        return []
    rows = [list(r) for S in subspaces for r in S.basis]
    offs = [c for S in subspaces for c in S.offset]
    if not rows:
        return [ToricSubspace.whole(n)]
    U, D, V = linalg.smith_normal_form(rows)
    Uc = [sum(Fraction(U[i][j]) * offs[j] for j in range(len(rows))) for i in range(len(rows))]
    d = [D[i][i] for i in range(min(len(rows), n))]
    s = sum(1 for x in d if x)
    # rows of D that vanish impose 0 = (Uc)_i (mod 1)
    if any(Uc[i].denominator != 1 for i in range(s, len(rows))):
        return []
    W = linalg.integer_inverse(V)[:s]
    out = set()
    for js in itertools.product(*[range(d[i]) for i in range(s)]):
        t = [(Uc[i] + js[i]) / d[i] for i in range(s)]
        out.add(ToricSubspace.from_saturated(n, W, t))
    return sorted(out, key=ToricSubspace.sort_key)


class ToricArrangement:
    """Finite set of toric hyperplanes in T^n, stored in canonical form."""

    def __init__(self, hyperplanes: Sequence[ToricHyperplane], dimension: Optional[int] = None):
        if dimension is None:
            if not hyperplanes:
                raise ToricError("dimension needed for an empty arrangement")
            dimension = hyperplanes[0].n
        self.n = dimension
        self.hyperplanes: Tuple[ToricHyperplane, ...] = tuple(hyperplanes)
        for i, H in enumerate(self.hyperplanes):
            if H.n != self.n:
                raise ToricError(f"hyperplane {i} lives in dimension {H.n}, expected {self.n}")
        if len(set(self.hyperplanes)) != len(self.hyperplanes):
            raise ToricError("duplicate toric hyperplanes")

    @classmethod
    def from_equations(cls, normals: Sequence[Sequence[int]], offsets: Sequence = None, dimension=None):
        if offsets is None:
            offsets = [0] * len(normals)
        return cls([ToricHyperplane.make(a, b) for a, b in zip(normals, offsets)], dimension)

    def __len__(self):
        return len(self.hyperplanes)

    def __repr__(self):
        return f"ToricArrangement(n={self.n}, m={len(self)})"

    def essential_witness(self):
        ker = linalg.nullspace([H.normal for H in self.hyperplanes], self.n)
        return linalg.clear_denominators(ker[0]) if ker else None

    def is_essential(self) -> bool:
        return self.essential_witness() is None

    def require_essential(self) -> None:
        w = self.essential_witness()
        if w is not None:
            raise ToricError(f"arrangement is not essential; normals are orthogonal to {w}")


def intersection_poset(A: ToricArrangement, require_essential: bool = True) -> GradedPoset:
    """Components of all intersections ordered by reverse inclusion, with ∅ as 1̂.

    Rank is codimension.  Labels are :class:`ToricSubspace` objects.
    """
    if require_essential:
        A.require_essential()
    n = A.n
    whole = ToricSubspace.whole(n)
    elems = {whole}
    frontier = [whole]
    hyper = [H.subspace() for H in A.hyperplanes]
    # if G is properly inside F, some hyperplane holds G but not F, and then G
    # is a component of F ∩ H; so the covers are exactly the pairs seen here
    cover_pairs = set()
    while frontier:
        nxt = []
        for F in frontier:
            for H in hyper:
                if H.contains(F):
                    continue
                for G in intersect_components([F, H]):
                    cover_pairs.add((F, G))
                    if G not in elems:
                        elems.add(G)
                        nxt.append(G)
        frontier = nxt
    labels = sorted(elems, key=ToricSubspace.sort_key)
    ranks = [S.codim for S in labels]
    pos = {S: i for i, S in enumerate(labels)}
    covers = [(pos[F], pos[G]) for F, G in cover_pairs]
    # the minimal components sit below the adjoined empty set
    top = len(labels)
    covers += [(i, top) for i in range(top) if not any(pos[F] == i for F, _ in cover_pairs)]
    labels.append(ToricSubspace.empty(n))
    ranks.append(max(ranks) + 1)
    return GradedPoset(ranks, covers, labels)


def _chi_from_poset(P: GradedPoset) -> IntPoly:
    mu = P.mobius_matrix[P.bottom]
    terms: Dict[int, int] = {}
    for x, S in enumerate(P.labels):
        if not S.is_empty:
            terms[S.dim] = terms.get(S.dim, 0) + int(mu[x])
    return IntPoly.from_terms(terms)


def toric_characteristic_polynomial(A: ToricArrangement) -> IntPoly:
    """sum over nonempty x of mu(T^n, x) t^dim(x)."""
    return _chi_from_poset(intersection_poset(A, require_essential=False))


def is_alternating(p: IntPoly) -> bool:
    """True iff the coefficients alternate in sign from the leading one (zeros break it)."""
    n = p.degree
    return all(p.coefficient(k) * (-1) ** (n - k) > 0 for k in range(n + 1))


def n_of_arrangement(A: ToricArrangement) -> int:
    """lcm of the nonzero n x n minors of the integral normal matrix."""
    A.require_essential()
    cols = [H.integral_form()[0] for H in A.hyperplanes]
    minors = []
    for sub in itertools.combinations(cols, A.n):
        det = linalg.determinant([list(c) for c in sub])
        if det:
            minors.append(abs(det))
    return reduce(linalg.lcm, minors, 1)


def default_q(A: ToricArrangement) -> int:
    return n_of_arrangement(A) * max(1, len(A))


def chi_by_lattice_points(A: ToricArrangement, q: Optional[int] = None) -> int:
    """Number of points of (1/q Z)^n / Z^n lying on no hyperplane.

    Raises:
        ToricError: if ``q`` is not a positive multiple of N(H).
    """
    N = n_of_arrangement(A)
    if q is None:
        q = default_q(A)
    if q <= 0 or q % N:
        raise ToricError(f"q = {q} is not a positive multiple of N = {N}")
    grid = np.indices((q,) * A.n).reshape(A.n, -1).T.astype(np.int64)
    alive = np.ones(len(grid), dtype=bool)
    for H in A.hyperplanes:
        # a . (k / q) = u / r (mod 1)  <=>  r a . k = u q (mod q r)
        u, r = H.offset.numerator, H.offset.denominator
        alive &= (r * (grid @ np.array(H.normal, dtype=np.int64)) - u * q) % (q * r) != 0
    return int(alive.sum())


def toric_region_count(A: ToricArrangement) -> int:
    """(-1)^n chi(0), cross-checked against Z_t of the intersection poset."""
    P = intersection_poset(A)
    by_chi = (-1) ** A.n * _chi_from_poset(P)(0)
    by_z = zaslavsky_invariants(P).Zt
    if by_chi != by_z:
        raise AssertionError(f"region counts disagree: chi gives {by_chi}, Z_t gives {by_z}")
    return by_z


def psi_toric(A: ToricArrangement, via: str = "omega") -> AbPoly:
    """ab-index of the induced subdivision (a-b)^(n+1) + omega(a H'(Psi(P)) b)* / 2.

    ``via="phi_t"`` evaluates phi_t(Psi(P with a new minimum))* instead.

    Raises:
        ArithmeticError: if an odd coefficient shows up before halving.
    """
    P = intersection_poset(A)
    if via == "phi_t":
        return phi_t(ab_index(adjoin_bottom(P))).star()
    if via != "omega":
        raise ValueError(f"unknown method {via!r}")
    cd = omega(A_LETTER * h_prime(ab_index(P)) * B_LETTER).star()
    odd = {w: c for w, c in cd.terms().items() if c % 2}
    if odd:
        raise ArithmeticError(f"odd coefficients {CdPoly(odd)}; the subdivision is not regular")
    half = CdPoly({w: c // 2 for w, c in cd.terms().items()})
    return a_minus_b_power(A.n + 1) + half.expand()


def fiber_cardinality_toric(P: GradedPoset, chain: Sequence[int]) -> int:
    """prod_{i=2..k-1} Z([x(i-1), x(i)]) * Z_t([x(k-1), x(k)]).

    ``chain`` lists ``x1 < ... < xk = 1̂`` as indices into ``P`` (k >= 2); the
    adjoined minimum is implicit.
    """
    chain = list(chain)
    if len(chain) < 2:
        raise PosetError("chain needs at least two elements above the adjoined 0̂")
    if chain[-1] != P.top:
        raise PosetError("chain must end at 1̂")
    for x, y in zip(chain, chain[1:]):
        if not P.lt(x, y):
            raise PosetError(f"chain is not increasing at {x}, {y}")
    out = 1
    for x, y in zip(chain[:-2], chain[1:-1]):
        out *= zaslavsky_invariants(interval(P, x, y)).Z
    return out * zaslavsky_invariants(interval(P, chain[-2], chain[-1])).Zt


def toric_f_vector(A: ToricArrangement, via: str = "moebius") -> Tuple[int, ...]:
    """(f_1, ..., f_(n+1)): number of cells of each dimension 0..n of the subdivision."""
    P = intersection_poset(A)
    n = A.n
    if via == "moebius":
        mu = P.mobius_matrix
        dims = [S.dim for S in P.labels]
        out = []
        for i in range(n + 1):
            total = sum(
                int(mu[x, y])
                for x in P.elements()
                if dims[x] == i
                for y in P.elements()
                if dims[y] == 0 and P.leq(x, y)
            )
            out.append((-1) ** i * total)
        return tuple(out)
    if via == "flag_h":
        fv = flag_vectors(P)

        def h(lo, hi):
            return fv.h[frozenset(range(lo, hi + 1))]

        out = [1 + h(n, n)]
        out += [h(n - i, n) + h(n - i, n - 1) + h(n - i + 1, n) + h(n - i + 1, n - 1) for i in range(1, n)]
        out.append(h(1, n - 1) + h(1, n))
        return tuple(out)
    raise ValueError(f"unknown method {via!r}")


# ---------------------------------------------------------------------------
# two-dimensional subdivision


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _dot(u, v):
    return sum(Fraction(x) * y for x, y in zip(u, v))


@dataclass
class ToricSubdivision:
    """Cell structure of a 2-D toric arrangement.

    Attributes:
        poset: face poset with 0̂, vertices, edges, regions, 1̂ at ranks 0..4.
        vertices: points in [0, 1)^2.
        edges: ``(line index, start vertex, end vertex)``.
        regions: canonical region ids (a point of each region, mod 1).
        regular: combinatorial regularity verdict.
        problems: why the subdivision is not regular.
    """

    poset: GradedPoset
    vertices: List[Tuple[Fraction, Fraction]]
    edges: List[Tuple[int, int, int]]
    regions: List[Tuple[Fraction, Fraction]]
    regular: bool
    problems: List[str] = field(default_factory=list)

    def f_vector(self) -> Tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.regions)


def _cell_id(lines, p) -> Tuple[Fraction, Fraction]:
    # the periodic lift of the cell through p is the polygon
    # k_i <= a_i.x - b_i <= k_i + 1; its vertex average mod 1 names the region
    bounds = []
    for a, b in lines:
        v = _dot(a, p) - b
        k = math.floor(v)
        bounds.append((a, b + k))
        bounds.append((a, b + k + 1))
    pts = set()
    for (a1, c1), (a2, c2) in itertools.combinations(bounds, 2):
        det = a1[0] * a2[1] - a1[1] * a2[0]
        if det == 0:
            continue
        x = (Fraction(c1) * a2[1] - Fraction(c2) * a1[1]) / det
        y = (Fraction(a1[0]) * c2 - Fraction(a2[0]) * c1) / det
        q = (x, y)
        if all(k0 <= _dot(a, q) - b <= k0 + 1 for (a, b), k0 in zip(lines, [math.floor(_dot(a, p) - b) for a, b in lines])):
            pts.add(q)
    if len(pts) < 3:
        raise ToricError("region lift is unbounded; the arrangement is not essential")
    cx = sum(q[0] for q in pts) / len(pts)
    cy = sum(q[1] for q in pts) / len(pts)
    return (_frac(cx), _frac(cy))


def _safe_step(lines, p, direction) -> Fraction:
    # half the largest t such that p + s*direction meets no line for
    # 0 < s <= t; a line through p still has translates one unit away
    best = Fraction(1)
    for a, b in lines:
        v = _frac(_dot(a, p) - b)
        gap = min(v, 1 - v) if v else Fraction(1)
        slope = abs(_dot(a, direction))
        if slope:
            best = min(best, gap / slope)
    return best / 2


def _angle_key(d):
    # exact angular order of an integer direction: half-plane, then slope
    x, y = d
    upper = y > 0 or (y == 0 and x > 0)
    return (0 if upper else 1, Fraction(-x, abs(x) + abs(y)) if upper else Fraction(x, abs(x) + abs(y)))


def toric_face_poset_2d(A: ToricArrangement) -> ToricSubdivision:
    """Vertices, edges and regions of a toric line arrangement on T^2, exactly.

    Raises:
        ToricError: if ``n != 2`` or the arrangement is not essential.
    """
    if A.n != 2:
        raise ToricError("the subdivision oracle handles T^2 only")
    A.require_essential()
    lines = [(H.normal, H.offset) for H in A.hyperplanes]
    problems: List[str] = []

    # vertices: pairwise intersection points
    vertex_ids: Dict[Tuple[Fraction, Fraction], int] = {}
    for H1, H2 in itertools.combinations(A.hyperplanes, 2):
        for comp in intersect_components([H1.subspace(), H2.subspace()]):
            if comp.dim == 0:
                vertex_ids.setdefault(comp.point(), len(vertex_ids))
    vertices = sorted(vertex_ids)
    vertex_ids = {v: i for i, v in enumerate(vertices)}

    # edges: consecutive vertices along each closed line
    edges: List[Tuple[int, int, int]] = []
    edge_mid: List[Tuple[Fraction, Fraction]] = []
    for li, (a, b) in enumerate(lines):
        d = (-a[1], a[0])
        _, w0, w1 = _ext_gcd(d[0], d[1])
        w = (w0, w1)
        on = [v for v in vertices if (_dot(a, v) - b).denominator == 1]
        if not on:
            raise ToricError(f"line {li} carries no vertex")
        p0 = on[0]
        params = sorted((_frac(_dot(w, (v[0] - p0[0], v[1] - p0[1]))), vertex_ids[v]) for v in on)
        for j, (s, vid) in enumerate(params):
            s_next, vnext = params[(j + 1) % len(params)]
            if j + 1 == len(params):
                s_next += 1
            mid = (s + s_next) / 2
            edges.append((li, vid, vnext))
            edge_mid.append((p0[0] + mid * d[0], p0[1] + mid * d[1]))

    # regions around vertices and on both sides of edges
    region_ids: Dict[Tuple[Fraction, Fraction], int] = {}

    def region_of(p):
        rid = _cell_id(lines, p)
        return region_ids.setdefault(rid, len(region_ids))

    corners: List[List[int]] = []
    for v in vertices:
        dirs = []
        for a, b in lines:
            if (_dot(a, v) - b).denominator == 1:
                dirs += [(-a[1], a[0]), (a[1], -a[0])]
        dirs.sort(key=_angle_key)
        here = []
        for j, u in enumerate(dirs):
            u2 = dirs[(j + 1) % len(dirs)]
            sector = (u[0] + u2[0], u[1] + u2[1])
            eps = _safe_step(lines, v, sector)
            here.append(region_of((v[0] + eps * sector[0], v[1] + eps * sector[1])))
        corners.append(here)
    sides: List[Tuple[int, int]] = []
    for (li, _, _), m in zip(edges, edge_mid):
        a = lines[li][0]
        eps = min(_safe_step(lines, m, a), Fraction(1, 2 * (a[0] ** 2 + a[1] ** 2)))
        plus = region_of((m[0] + eps * a[0], m[1] + eps * a[1]))
        minus = region_of((m[0] - eps * a[0], m[1] - eps * a[1]))
        sides.append((plus, minus))

    regions = sorted(region_ids, key=lambda r: region_ids[r])

    for e, (li, s, t) in enumerate(edges):
        if s == t:
            problems.append(f"edge {e} on line {li} is a loop at vertex {s}")
        if sides[e][0] == sides[e][1]:
            problems.append(f"edge {e} has region {sides[e][0]} on both sides")
    for vi, here in enumerate(corners):
        for r in set(here):
            if here.count(r) > 1:
                problems.append(f"region {r} meets vertex {vi} in {here.count(r)} corners")

    nv, ne, nr = len(vertices), len(edges), len(regions)
    ranks = [0] + [1] * nv + [2] * ne + [3] * nr + [4]
    top = 1 + nv + ne + nr
    covers = [(0, 1 + i) for i in range(nv)]
    for e, (_, s, t) in enumerate(edges):
        covers += [(1 + s, 1 + nv + e), (1 + t, 1 + nv + e)]
        covers += [(1 + nv + e, 1 + nv + ne + r) for r in sides[e]]
    covers += [(1 + nv + ne + r, top) for r in range(nr)]
    labels = ["0̂"] + [("vertex", v) for v in vertices] + [("edge", e) for e in edges]
    labels += [("region", r) for r in regions] + ["1̂"]
    poset = GradedPoset(ranks, covers, labels)
    return ToricSubdivision(poset, vertices, edges, regions, not problems, problems)


def zero_map_2d(sub: ToricSubdivision, A: ToricArrangement, P: GradedPoset) -> Dict[int, Optional[int]]:
    """The zero map on cells: element of the subdivision poset -> element of P.

    Regions go to T^2, edges to their line, vertices to their point and the
    empty face to ∅.  The top of the subdivision poset maps to None, the
    adjoined minimum below P.
    """
    out: Dict[int, Optional[int]] = {}
    index = {S: i for i, S in enumerate(P.labels)}
    lines = [H.subspace() for H in A.hyperplanes]
    for x, lab in enumerate(sub.poset.labels):
        if lab == "0̂":
            out[x] = P.top
        elif lab == "1̂":
            out[x] = None
        elif lab[0] == "region":
            out[x] = P.bottom
        elif lab[0] == "edge":
            out[x] = index[lines[lab[1][0]]]
        else:
            v = lab[1]
            out[x] = next(i for i, S in enumerate(P.labels) if S.dim == 0 and S.contains_point(v))
    return out
