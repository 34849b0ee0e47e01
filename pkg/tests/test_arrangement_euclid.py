"""Real arrangements: lattices, region counts, face posets and zero-map fibers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdindex.arrangement_euclid import (
    AffineArrangement,
    ArrangementError,
    Flat,
    NonEssentialError,
    affine_hull_index,
    characteristic_polynomial,
    face_lattice,
    face_poset_central,
    faces,
    fiber_cardinality_central,
    fiber_cardinality_unbounded,
    intersection_lattice,
    psi_central,
    psi_unbounded,
    region_counts,
    unbounded_structures,
)
from cdindex.corpus import random_affine_arrangement
from cdindex.intpoly import IntPoly
from cdindex.ncpoly import A_MINUS_B, CdPoly, ab_to_cd
from cdindex.oracle import ab_index_by_chains, region_census
from cdindex.poset import PosetError, ab_index, flag_vectors, is_eulerian

seeds = st.integers(0, 10**6)

SQUARE = AffineArrangement([[1, 0], [0, 1], [1, 0], [0, 1]], [0, 0, 1, 1])
BRAID = AffineArrangement([[1, 0], [0, 1], [1, 1]], [0, 0, 0])


def test_duplicate_hyperplanes_rejected():
    with pytest.raises(ArrangementError):
        AffineArrangement([[1, 1], [2, 2]], [1, 2])
    with pytest.raises(ArrangementError):
        AffineArrangement([[0, 0]], [1])


def test_non_essential_witness():
    A = AffineArrangement([[1, -1, 0], [0, 1, -1]], [0, 0])
    with pytest.raises(NonEssentialError) as info:
        intersection_lattice(A)
    assert info.value.witness == (1, 1, 1)
    assert len(intersection_lattice(A, require_essential=False)) == 4


def test_flats():
    F = Flat.from_equations(2, [(1, 0, 1), (2, 0, 3)])
    assert F.is_empty and F.dim == -1
    line = Flat.whole(2).meet((1, 1), 2)
    assert line.dim == 1 and Flat.whole(2).contains(line)
    assert line.contains(line.meet((1, 0), 0))
    assert str(Flat.whole(3)) == "R^3"


def test_square_arrangement():
    assert characteristic_polynomial(SQUARE) == IntPoly([4, -4, 1])
    assert region_counts(SQUARE) == (9, 1, 8)
    assert region_census(SQUARE) == (9, 1)
    assert psi_unbounded(SQUARE) == CdPoly.parse("cc + 6*d")


def test_central_three_lines():
    assert characteristic_polynomial(BRAID) == IntPoly([2, -3, 1])
    assert region_counts(BRAID) == (6, 0, 6)
    T = face_poset_central(BRAID)
    assert is_eulerian(T)
    assert ab_to_cd(ab_index(T)) == psi_central(BRAID) == psi_central(BRAID, via="phi") == CdPoly.parse("cc + 4*d")


def test_psi_central_rejects_affine():
    with pytest.raises(ArrangementError):
        psi_central(SQUARE)
    with pytest.raises(ArrangementError):
        unbounded_structures(BRAID)


def test_face_signs_and_boundedness():
    fs = faces(SQUARE)
    assert [sum(1 for f in fs if f.dim == d) for d in range(3)] == [4, 12, 9]
    (inner,) = [f for f in fs if f.dim == 2 and f.bounded]
    assert str(inner) == "++--"
    assert sum(1 for f in fs if f.bounded) == 1 + 4 + 4


def test_affine_hull_index():
    L = intersection_lattice(SQUARE)
    corner = next(f for f in faces(SQUARE) if f.dim == 0)
    assert L.labels[affine_hull_index(SQUARE, L, corner)].dim == 0


def test_fiber_formulas_validate_chains():
    L = intersection_lattice(BRAID)
    with pytest.raises(PosetError):
        fiber_cardinality_central(L, [L.bottom])  # does not end at the top
    assert fiber_cardinality_central(L, [L.top]) == 1
    L2 = intersection_lattice(SQUARE)
    with pytest.raises(PosetError):
        fiber_cardinality_unbounded(L2, [L2.top])


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_zaslavsky_region_counts(seed):
    A = random_affine_arrangement(seed, max_dim=2, max_hyperplanes=5)
    chi = characteristic_polynomial(A)
    regions, bounded = region_census(A)
    assert (regions, bounded) == ((-1) ** A.n * chi(-1), (-1) ** A.n * chi(1))
    rc = region_counts(A)
    assert (rc.regions, rc.bounded) == (regions, bounded)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_central_face_poset_matches_omega(seed):
    A = random_affine_arrangement(seed, max_dim=3, max_hyperplanes=5, central=True)
    T = face_poset_central(A)
    assert ab_to_cd(ab_index(T)) == psi_central(A) == psi_central(A, via="phi")


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_unbounded_structures(seed):
    A = random_affine_arrangement(seed, max_dim=3, max_hyperplanes=5, central=False)
    S = unbounded_structures(A)
    assert ab_to_cd(ab_index_by_chains(S.T_ub)) == psi_unbounded(A)
    assert ab_index(S.T_ub).star() * A_MINUS_B == ab_index(S.Q)
    for S_, f, _ in flag_vectors(S.T_ub).table():
        assert f % 2 ** len(S_) == 0


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_face_lattice_chain_count(seed):
    A = random_affine_arrangement(seed, max_dim=2, max_hyperplanes=5, central=False)
    T = face_lattice(A)
    assert ab_index(T) == ab_index_by_chains(T)
    assert len(T.of_rank(A.n + 1)) == region_census(A)[0]
