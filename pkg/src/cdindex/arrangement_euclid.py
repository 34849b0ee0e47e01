"""Rational hyperplane arrangements in R^n.

Everything is exact: flats are reduced echelon forms over Q and faces are
sign vectors whose feasibility is decided by Fourier-Motzkin elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .intpoly import IntPoly
from .ncpoly import A as A_LETTER
from .ncpoly import CdPoly, ab_to_cd, omega, phi
from .poset import (
    GradedPoset,
    PosetError,
    ab_index,
    adjoin_bottom,
    interval,
    rank_selection,
    zaslavsky_invariants,
)

__all__ = [
    "AffineArrangement",
    "ArrangementError",
    "NonEssentialError",
    "Flat",
    "Face",
    "RegionCounts",
    "UnboundedStructures",
    "intersection_lattice",
    "characteristic_polynomial",
    "region_counts",
    "faces",
    "face_poset_central",
    "face_lattice",
    "psi_central",
    "unbounded_structures",
    "psi_unbounded",
    "fiber_cardinality_central",
    "fiber_cardinality_unbounded",
    "affine_hull_index",
]

FACE_LIMIT_DIM = 4


class ArrangementError(ValueError):
    """Invalid arrangement or an operation whose precondition fails."""


class NonEssentialError(ArrangementError):
    """The normals do not span; ``witness`` is a nonzero vector orthogonal to all of them."""

    def __init__(self, witness):
        super().__init__(f"arrangement is not essential; normals are orthogonal to {witness}")
        self.witness = witness


def _canonical_hyperplane(normal: Sequence[int], offset: Fraction) -> Tuple[Tuple[int, ...], Fraction]:
    vec, g = linalg.primitive(normal)
    sign = 1 if next(x for x in vec if x) > 0 else -1
    return tuple(sign * x for x in vec), sign * Fraction(offset) / g


class AffineArrangement:
    """Finite set of hyperplanes ``normal . x = offset`` in R^n.

    Args:
        normals: integer normal vectors, all of the same length ``n``.
        offsets: rational right-hand sides.
    """

    def __init__(self, normals: Sequence[Sequence[int]], offsets: Sequence, dimension: Optional[int] = None):
        if len(normals) != len(offsets):
            raise ArrangementError("one offset per normal expected")
        if dimension is None:
            if not normals:
                raise ArrangementError("dimension needed for an empty arrangement")
            dimension = len(normals[0])
        self.n = dimension
        self.normals: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in a) for a in normals)
        self.offsets: Tuple[Fraction, ...] = tuple(Fraction(b) for b in offsets)
        seen = {}
        for i, a in enumerate(self.normals):
            if len(a) != self.n:
                raise ArrangementError(f"hyperplane {i} has {len(a)} coordinates, expected {self.n}")
            if not any(a):
                raise ArrangementError(f"hyperplane {i} has zero normal")
            key = _canonical_hyperplane(a, self.offsets[i])
            if key in seen:
                raise ArrangementError(f"hyperplanes {seen[key]} and {i} coincide")
            seen[key] = i
        self._faces: Optional[Tuple["Face", ...]] = None

    def __len__(self):
        return len(self.normals)

    def __repr__(self):
        return f"AffineArrangement(n={self.n}, m={len(self)})"

    @property
    def hyperplanes(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        return list(zip(self.normals, self.offsets))

    def is_central(self) -> bool:
        """True iff all hyperplanes share a point."""
        return linalg.solve_affine(self.hyperplanes, self.n) is not None

    def essential_witness(self):
        """A nonzero vector orthogonal to every normal, or None."""
        ker = linalg.nullspace(self.normals, self.n)
        return linalg.clear_denominators(ker[0]) if ker else None

    def is_essential(self) -> bool:
        return self.essential_witness() is None

    def require_essential(self) -> None:
        w = self.essential_witness()
        if w is not None:
            raise NonEssentialError(w)


@dataclass(frozen=True)
class Flat:
    """Affine subspace as the reduced echelon form of its equations ``[a | b]``.

    ``rows is None`` encodes the empty set.
    """

    n: int
    rows: Optional[Tuple[Tuple[Fraction, ...], ...]]

    @classmethod
    def whole(cls, n: int) -> "Flat":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "Flat":
        return cls(n, None)

    @classmethod
    def from_equations(cls, n: int, eqs: Iterable[Sequence]) -> "Flat":
        eqs = [tuple(Fraction(x) for x in e) for e in eqs]
        if not eqs:
            return cls.whole(n)
        R, piv = linalg.rref(eqs, n + 1)
        if n in piv:
            return cls.empty(n)
        return cls(n, tuple(R))

    @property
    def is_empty(self) -> bool:
        return self.rows is None

    @property
    def dim(self) -> int:
        return -1 if self.rows is None else self.n - len(self.rows)

    @property
    def codim(self) -> int:
        return self.n + 1 if self.rows is None else len(self.rows)

    def meet(self, normal: Sequence[int], offset: Fraction) -> "Flat":
        """Intersection with the hyperplane ``normal . x = offset``."""
        if self.rows is None:
            return self
        return Flat.from_equations(self.n, list(self.rows) + [tuple(normal) + (offset,)])

    def contains(self, other: "Flat") -> bool:
        """True iff ``other`` is a subset of this flat."""
        if other.rows is None:
            return True
        if self.rows is None:
            return False
        return Flat.from_equations(self.n, self.rows + other.rows) == other

    def point(self) -> Tuple[Fraction, ...]:
        """Some point of the flat."""
        if self.rows is None:
            raise ArrangementError("the empty flat has no points")
        x0, _ = linalg.solve_affine([(r[:-1], r[-1]) for r in self.rows], self.n)
        return x0

    def __str__(self):
        if self.rows is None:
            return "∅"
        if not self.rows:
            return f"R^{self.n}"
        eqs = []
        for r in self.rows:
            lhs = linalg.format_linear(r[:-1])
            eqs.append(f"{lhs} = {r[-1]}")
        return "{" + ", ".join(eqs) + "}"


def intersection_lattice(A: AffineArrangement, require_essential: bool = True) -> GradedPoset:
    """All nonempty intersections ordered by reverse inclusion, plus ∅ on top if needed.

    The rank of a flat is its codimension; ∅ sits one rank above the minimal
    flats.  Labels are :class:`Flat` objects.

    Raises:
        NonEssentialError: when ``require_essential`` and the normals do not span.
    """
    if require_essential:
        A.require_essential()
    n = A.n
    whole = Flat.whole(n)
    flats = {whole}
    frontier = [whole]
    empty_seen = False
    while frontier:
        nxt = []
        for F in frontier:
            for a, b in A.hyperplanes:
                G = F.meet(a, b)
                if G.is_empty:
                    empty_seen = True
                elif G != F and G not in flats:
                    flats.add(G)
                    nxt.append(G)
        frontier = nxt
    flats = sorted(flats, key=lambda F: (F.codim, str(F)))
    top_codim = max(F.codim for F in flats)
    labels: List[Flat] = list(flats)
    ranks = [F.codim for F in flats]
    if empty_seen or len(flats) == 1:
        labels.append(Flat.empty(n))
        ranks.append(top_codim + 1)
    covers = []
    for i, F in enumerate(labels):
        for j, G in enumerate(labels):
            if ranks[j] == ranks[i] + 1 and F.contains(G):
                covers.append((i, j))
    return GradedPoset(ranks, covers, labels)


def characteristic_polynomial(A: AffineArrangement) -> IntPoly:
    """sum over nonempty flats x of mu(R^n, x) t^dim(x)."""
    L = intersection_lattice(A, require_essential=False)
    mu = L.mobius_matrix[L.bottom]
    terms: Dict[int, int] = {}
    for x, F in enumerate(L.labels):
        if not F.is_empty:
            terms[F.dim] = terms.get(F.dim, 0) + int(mu[x])
    return IntPoly.from_terms(terms)


class RegionCounts(NamedTuple):
    regions: int
    bounded: int
    unbounded: int


def region_counts(A: AffineArrangement) -> RegionCounts:
    """Number of regions, bounded regions and unbounded regions from the lattice."""
    L = intersection_lattice(A)
    z = zaslavsky_invariants(L)
    if A.is_central():
        bounded = z.Z if A.n == 0 else 0
        return RegionCounts(z.Z, bounded, z.Z - bounded)
    return RegionCounts(z.Z - z.Zb, z.Zb, z.Zub)


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class Face:
    """Relatively open face given by its sign vector against the hyperplanes."""

    signs: Tuple[int, ...]
    dim: int
    bounded: bool

    def __le__(self, other: "Face") -> bool:
        # closure containment: every nonzero sign of self agrees with other
        return all(s == 0 or s == t for s, t in zip(self.signs, other.signs))

    def __str__(self):
        return "".join({-1: "-", 0: "0", 1: "+"}[s] for s in self.signs)


def _sign_system(hyper, signs: Sequence[int]):
    eqs, ineqs = [], []
    for (a, b), s in zip(hyper, signs):
        if s == 0:
            eqs.append((a, b))
        elif s > 0:
            ineqs.append((a, b, True))
        else:
            ineqs.append((tuple(-x for x in a), -b, True))
    return eqs, ineqs


def _sign_vectors(hyper, n: int) -> List[Tuple[int, ...]]:
    """Feasible sign vectors, extended one hyperplane at a time.

    The points with a given partial sign vector form a nonempty relatively
    open convex set whose affine hull is its flat.  If that set meets the
    next hyperplane, it either lies in it (rank test on the flat) or meets
    both sides; otherwise it lies on one side and a single test decides which.
    """
    partial: List[Tuple[int, ...]] = [()]
    for i, (a, b) in enumerate(hyper):
        head = hyper[: i + 1]
        nxt = []
        for sigma in partial:
            if linalg.feasible(*_sign_system(head, sigma + (0,)), n):
                flat = [tuple(h) + (c,) for (h, c), s in zip(hyper, sigma) if s == 0]
                if linalg.rank(flat + [tuple(a) + (b,)]) == linalg.rank(flat):
                    nxt.append(sigma + (0,))
                else:
                    nxt += [sigma + (-1,), sigma + (0,), sigma + (1,)]
            elif linalg.feasible(*_sign_system(head, sigma + (1,)), n):
                nxt.append(sigma + (1,))
            else:
                nxt.append(sigma + (-1,))
        partial = nxt
    return partial


def faces(A: AffineArrangement) -> List[Face]:
    """All nonempty faces as sign vectors, each marked bounded or not.

    A face is unbounded iff its recession cone is nonzero, and that cone is
    the closure of the cones of the linear arrangement (offsets set to zero)
    lying conformally below the face's sign vector.  The result is cached on
    the arrangement.
    """
    if A._faces is not None:
        return list(A._faces)
    if A.n > FACE_LIMIT_DIM:
        raise ArrangementError(f"face enumeration is limited to dimension <= {FACE_LIMIT_DIM}")
    cones = [t for t in _sign_vectors([(a, 0) for a in A.normals], A.n) if any(t)]
    out = []
    for sigma in _sign_vectors(A.hyperplanes, A.n):
        zero = [a for a, s in zip(A.normals, sigma) if s == 0]
        dim = A.n - linalg.rank(zero)
        unbounded = any(all(t == 0 or t == s for t, s in zip(tau, sigma)) for tau in cones)
        out.append(Face(sigma, dim, not unbounded))
    A._faces = tuple(sorted(out, key=lambda f: (f.dim, f.signs)))
    return list(A._faces)


def _face_poset(fs: List[Face], ranks: List[int], bottom_rank: Optional[int], top_rank: int,
                bottom_label, top_label, dual: bool = False, consecutive: bool = True) -> GradedPoset:
    labels: list = list(fs)
    rks = list(ranks)
    if bottom_rank is not None:
        labels.append(bottom_label)
        rks.append(bottom_rank)
    labels.append(top_label)
    rks.append(top_rank)
    k = len(fs)
    covers = []
    for i, f in enumerate(fs):
        for j, g in enumerate(fs):
            # faces are graded by dimension, so covers are the dimension steps
            if g.dim == f.dim + 1 and f <= g:
                covers.append((j, i) if dual else (i, j))
    minimal = [i for i in range(k) if not any(hi == i for _, hi in covers)]
    maximal = [i for i in range(k) if not any(lo == i for lo, _ in covers)]
    if bottom_rank is not None:
        covers += [(k, i) for i in minimal]
        covers += [(i, k + 1) for i in maximal]
    else:
        covers += [(i, k) for i in maximal]
    return GradedPoset(rks, covers, labels, consecutive=consecutive)


def face_poset_central(A: AffineArrangement) -> GradedPoset:
    """Face lattice T of a central essential arrangement, by sign-vector enumeration.

    The origin is 0̂, a cone of dimension k has rank k and 1̂ is adjoined at rank
    n + 1; this is the face poset of the induced subdivision of the sphere.
    """
    if not A.is_central():
        raise ArrangementError("arrangement is not central")
    A.require_essential()
    fs = faces(A)
    return _face_poset(fs, [f.dim for f in fs], None, A.n + 1, None, "1̂")


def face_lattice(A: AffineArrangement) -> GradedPoset:
    """Face lattice T of an arrangement: empty face at rank 0, k-faces at rank k + 1, 1̂ at n + 2."""
    A.require_essential()
    fs = faces(A)
    return _face_poset(fs, [f.dim + 1 for f in fs], 0, A.n + 2, "∅", "1̂")


def psi_central(A: AffineArrangement, via: str = "omega") -> CdPoly:
    """cd-index of the face lattice of a central arrangement, from its intersection lattice.

    ``via="omega"`` evaluates omega(a Psi(L))*, ``via="phi"`` evaluates
    phi(Psi(L with a new minimum))*.
    """
    if not A.is_central():
        raise ArrangementError("arrangement is not central")
    L = intersection_lattice(A)
    if via == "omega":
        return omega(A_LETTER * ab_index(L)).star()
    if via == "phi":
        return ab_to_cd(phi(ab_index(adjoin_bottom(L))).star())
    raise ValueError(f"unknown method {via!r}")


class UnboundedStructures(NamedTuple):
    L_ub: GradedPoset
    T_ub: GradedPoset
    Q: GradedPoset


def lattice_unbounded(A: AffineArrangement) -> GradedPoset:
    """Intersection lattice with its coatoms (the points) removed."""
    if A.is_central():
        raise ArrangementError("arrangement is central")
    L = intersection_lattice(A)
    return rank_selection(L, range(1, A.n))


def unbounded_structures(A: AffineArrangement) -> UnboundedStructures:
    """L_ub, the poset T_ub of unbounded faces, and Q (unbounded faces in the dual order).

    T_ub: 0̂, unbounded k-faces at rank k, 1̂ at rank n + 1.
    Q: 0̂, unbounded k-faces at rank n + 1 - k (their rank in T*), 1̂ at rank n + 2.
    """
    L_ub = lattice_unbounded(A)
    ub = [f for f in faces(A) if not f.bounded]
    n = A.n
    T_ub = _face_poset(ub, [f.dim for f in ub], 0, n + 1, "∅", "1̂")
    Q = _face_poset(ub, [n + 1 - f.dim for f in ub], 0, n + 2, "1̂", "∅", dual=True, consecutive=False)
    return UnboundedStructures(L_ub, T_ub, Q)


def psi_unbounded(A: AffineArrangement) -> CdPoly:
    """cd-index of the poset of unbounded faces: omega(a Psi(L_ub))*."""
    return omega(A_LETTER * ab_index(lattice_unbounded(A))).star()


# ---------------------------------------------------------------------------
# fibers of the zero map


def _check_chain(L: GradedPoset, chain: Sequence[int], min_len: int) -> List[int]:
    chain = list(chain)
    if len(chain) < min_len:
        raise PosetError(f"chain needs at least {min_len} elements above the adjoined 0̂")
    if chain[-1] != L.top:
        raise PosetError("chain must end at 1̂")
    for x, y in zip(chain, chain[1:]):
        if not L.lt(x, y):
            raise PosetError(f"chain is not increasing at {x}, {y}")
    return chain


def _Z(L: GradedPoset, x: int, y: int):
    return zaslavsky_invariants(interval(L, x, y))


def fiber_cardinality_central(L: GradedPoset, chain: Sequence[int]) -> int:
    """prod_{i=2..k} Z([x(i-1), x(i)]) for a chain 0̂ < x1 < ... < xk = 1̂ in L with 0̂ adjoined.

    ``chain`` lists ``x1, ..., xk`` as indices into ``L``; the adjoined 0̂ is implicit.
    """
    chain = _check_chain(L, chain, 1)
    out = 1
    for x, y in zip(chain, chain[1:]):
        out *= _Z(L, x, y).Z
    return out


def fiber_cardinality_unbounded(L: GradedPoset, chain: Sequence[int]) -> int:
    """prod_{i=2..k-1} Z([x(i-1), x(i)]) * Z_ub([x(k-1), x(k)]); chain as in the central case, k >= 2."""
    chain = _check_chain(L, chain, 2)
    out = 1
    for x, y in zip(chain[:-2], chain[1:-1]):
        out *= _Z(L, x, y).Z
    return out * _Z(L, chain[-2], chain[-1]).Zub


def affine_hull_index(A: AffineArrangement, L: GradedPoset, face: Face) -> int:
    """Index in ``L`` of the affine hull of ``face``."""
    F = Flat.from_equations(A.n, [a + (b,) for (a, b), s in zip(A.hyperplanes, face.signs) if s == 0])
    return L.labels.index(F)
