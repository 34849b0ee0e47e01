"""Exact linear algebra: Smith and Hermite forms, Fourier-Motzkin feasibility."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from cdindex import linalg
from cdindex.intpoly import IntPoly

small_int = st.integers(-6, 6)


@st.composite
def int_matrix(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small_int) for _ in range(c)] for _ in range(r)]


@settings(max_examples=150, deadline=None)
@given(int_matrix())
def test_smith_form_matches_sympy_and_transforms(M):
    U, D, V = linalg.smith_normal_form(M)
    assert linalg.matmul(linalg.matmul(U, M), V) == D
    assert abs(linalg.determinant(U)) == 1 and abs(linalg.determinant(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    ref = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    ref_diag = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    assert sorted(d for d in ref_diag if d) == nonzero


@settings(max_examples=150, deadline=None)
@given(int_matrix())
def test_hermite_form(M):
    H, K = linalg.hermite_normal_form(M)
    assert linalg.matmul(K, M) == H
    assert abs(linalg.determinant(K)) == 1
    lead = -1
    for row in H:
        if not any(row):
            continue
        col = next(j for j, x in enumerate(row) if x)
        assert col > lead and row[col] > 0
        lead = col


def test_rref_and_nullspace():
    R, piv = linalg.rref([[2, 4], [1, 2]])
    assert R == [(Fraction(1), Fraction(2))] and piv == [0]
    (v,) = linalg.nullspace([[1, 2]], 2)
    assert v == (Fraction(-2), Fraction(1))
    assert linalg.rank([[1, 1, 0], [0, 1, 1], [1, 2, 1]]) == 2


def test_solve_affine():
    assert linalg.solve_affine([([1, 1], 1), ([1, 1], 2)], 2) is None
    x0, basis = linalg.solve_affine([([1, -1], 3)], 2)
    assert x0[0] - x0[1] == 3 and len(basis) == 1


@pytest.mark.parametrize(
    "eqs, ineqs, expected",
    [
        ([], [([1], 0, True), ([-1], 0, True)], False),  # x > 0 and x < 0
        ([], [([1], 0, False), ([-1], 0, False)], True),  # x = 0
        ([], [([1, 1], 1, True), ([-1, 0], 0, True), ([0, -1], 0, True)], False),
        ([([1, -1], 0)], [([1, 0], 1, True)], True),
        ([([1, 0], 0)], [([1, 0], 0, True)], False),
    ],
)
def test_feasible(eqs, ineqs, expected):
    n = len((eqs or ineqs)[0][0])
    assert linalg.feasible(eqs, ineqs, n) is expected


def test_integer_helpers():
    assert linalg.primitive([4, -6]) == ((2, -3), 2)
    assert linalg.clear_denominators([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert linalg.integer_inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        linalg.integer_inverse([[2, 0], [0, 1]])
    assert linalg.lcm(4, 6) == 12 and linalg.lcm(0, 5) == 5


def test_intpoly():
    p = IntPoly([3, -2, 1])
    assert str(p) == "t^2 - 2*t + 3"
    assert p(3) == 6 and p.degree == 2 and p.coefficient(7) == 0
    assert p * IntPoly([0, 1]) == IntPoly.from_terms({3: 1, 2: -2, 1: 3})
    assert p + IntPoly([-3, 2, -1]) == IntPoly()


@settings(max_examples=100, deadline=None)
@given(int_matrix(max_rows=5, max_cols=5))
def test_integer_rank_matches_sympy(M):
    assert linalg.rank(M) == sympy.Matrix(M).rank()
    assert linalg.rank([[Fraction(x) for x in row] for row in M]) == sympy.Matrix(M).rank()


@settings(max_examples=100, deadline=None)
@given(int_matrix(max_rows=4, max_cols=4))
def test_integer_inverse_of_smith_transforms(M):
    U, _, V = linalg.smith_normal_form(M)
    for W in (U, V):
        inv = linalg.integer_inverse(W)
        assert linalg.matmul(inv, W) == [[int(i == j) for j in range(len(W))] for i in range(len(W))]
