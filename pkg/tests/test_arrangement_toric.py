"""Toric arrangements: subspaces, intersection posets, counts and the 2-D subdivision."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdindex.arrangement_toric import (
    ToricArrangement,
    ToricError,
    ToricHyperplane,
    ToricSubspace,
    chi_by_lattice_points,
    default_q,
    intersect_components,
    intersection_poset,
    is_alternating,
    n_of_arrangement,
    psi_toric,
    toric_characteristic_polynomial,
    toric_f_vector,
    toric_face_poset_2d,
    toric_region_count,
)
from cdindex.corpus import random_toric_arrangement
from cdindex.intpoly import IntPoly
from cdindex.oracle import ab_index_by_chains, grid_census, grid_component_count
from cdindex.poset import zaslavsky_invariants

seeds = st.integers(0, 10**6)


def test_hyperplane_canonical_form():
    H = ToricHyperplane.make([-2, 4], Fraction(7, 3))
    assert H.normal == (1, -2)
    assert H.offset == Fraction(5, 6)  # -7/6 mod 1
    assert H.integral_form() == ((6, -12), 5)
    with pytest.raises(ToricError):
        ToricHyperplane.make([0, 0])


def test_duplicates_and_dimension_checked():
    with pytest.raises(ToricError):
        ToricArrangement.from_equations([[1, 0], [2, 0]], [0, 2])  # both are x = 0
    with pytest.raises(ToricError):
        ToricArrangement([ToricHyperplane.make([1, 0]), ToricHyperplane.make([1, 0, 0])])


def test_single_line_is_not_essential():
    A = ToricArrangement.from_equations([[1, 0]], dimension=2)
    with pytest.raises(ToricError):
        intersection_poset(A)
    assert toric_characteristic_polynomial(A) == IntPoly([0, -1, 1])


def test_subspace_membership():
    S = ToricHyperplane.make([1, 1], Fraction(1, 2)).subspace()
    assert S.contains_point((Fraction(1, 4), Fraction(1, 4)))
    assert S.contains_point((Fraction(3, 4), Fraction(3, 4)))
    assert not S.contains_point((0, 0))
    assert ToricSubspace.whole(2).contains(S) and not S.contains(ToricSubspace.whole(2))
    assert S.contains(ToricSubspace.empty(2))


def test_intersection_components_count_by_determinant():
    a = ToricHyperplane.make([2, -1]).subspace()
    b = ToricHyperplane.make([-1, 2]).subspace()
    parts = intersect_components([a, b])
    assert len(parts) == 3 and all(p.dim == 0 for p in parts)
    c = ToricHyperplane.make([1, 0], Fraction(1, 2)).subspace()
    d = ToricHyperplane.make([1, 0], 0).subspace()
    assert intersect_components([c, d]) == []


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=2))
def test_components_match_grid_oracle(normals):
    if any(a == (0, 0) for a in normals):
        return
    subs = [ToricHyperplane.make(a).subspace() for a in normals]
    parts = intersect_components(subs)
    q = 1
    for p in parts:
        for x in p.point():
            q = q * x.denominator // __import__("math").gcd(q, x.denominator)
    q = max(q, 2)
    if q <= 12:
        assert grid_component_count(subs, q) == len(parts)


def test_grid_oracle_joins_points_along_steep_lines():
    # at q = 2 the kernel step (3, -1) of x + 3y = 0 leaves the box [-q, q]^2
    S = ToricHyperplane.make([1, 3]).subspace()
    assert grid_component_count([S], 2) == 1
    assert grid_component_count([S, S], 2) == 1


def test_coordinate_torus():
    A = ToricArrangement.from_equations([[1, 0], [0, 1]])
    assert toric_characteristic_polynomial(A) == IntPoly([1, -2, 1])
    assert n_of_arrangement(A) == 1
    assert toric_region_count(A) == 1
    assert toric_f_vector(A) == toric_f_vector(A, via="flag_h") == (1, 2, 1)
    sub = toric_face_poset_2d(A)
    assert not sub.regular and any("loop" in p for p in sub.problems)


def test_lattice_points_need_multiple_of_n(example1):
    with pytest.raises(ToricError):
        chi_by_lattice_points(example1, 4)
    assert default_q(example1) == 6
    assert chi_by_lattice_points(example1) == toric_characteristic_polynomial(example1)(6)


def test_alternating_flag():
    assert is_alternating(IntPoly([8, -3, 1]))
    assert not is_alternating(IntPoly([0, -1, 1]))


def test_example_two_routes(example2):
    assert psi_toric(example2) == psi_toric(example2, via="phi_t")
    with pytest.raises(ValueError):
        psi_toric(example2, via="other")


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_region_count_routes_agree(seed):
    A = random_toric_arrangement(seed)
    P = intersection_poset(A)
    chi = toric_characteristic_polynomial(A)
    assert toric_region_count(A) == zaslavsky_invariants(P).Zt == chi(0) * (-1) ** A.n
    sub = toric_face_poset_2d(A)
    assert len(sub.regions) == toric_region_count(A)
    assert toric_f_vector(A) == toric_f_vector(A, via="flag_h") == sub.f_vector()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_lattice_points_match_polynomial(seed):
    A = random_toric_arrangement(seed, max_hyperplanes=3)
    N = n_of_arrangement(A)
    chi = toric_characteristic_polynomial(A)
    for q in (N, 2 * N):
        assert chi_by_lattice_points(A, q) == chi(q)
        if q <= 30:
            assert grid_census(A, q)[0] == chi(q)


def test_regular_subdivisions_match_formula(toric_corpus):
    regular = [t for t in toric_corpus if t.sub.regular]
    assert regular
    for t in regular:
        assert ab_index_by_chains(t.sub.poset) == psi_toric(t.A) == psi_toric(t.A, via="phi_t")


def test_three_dimensional_torus():
    # the coordinate-plus-diagonal arrangement x, y, z, x+y+z = 0 in T^3
    A = ToricArrangement.from_equations([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    chi = toric_characteristic_polynomial(A)
    assert chi_by_lattice_points(A, 2) == chi(2)
    assert chi_by_lattice_points(A, 3) == chi(3)
    assert toric_f_vector(A) == toric_f_vector(A, via="flag_h")
    with pytest.raises(ToricError):
        toric_face_poset_2d(A)
