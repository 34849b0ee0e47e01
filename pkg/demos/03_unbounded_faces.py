"""Unbounded faces of the arrangement x, y, z = 0, 1.

The unbounded faces form a 2-sphere (the rhombicuboctahedron).  Its cd-index
comes from the lattice with the points removed; the sign-vector enumeration
confirms it.

Run: python3 demos/03_unbounded_faces.py
"""

from cdindex.arrangement_euclid import (
    AffineArrangement,
    characteristic_polynomial,
    psi_unbounded,
    region_counts,
    unbounded_structures,
)
from cdindex.ncpoly import A_MINUS_B, ab_to_cd
from cdindex.poset import ab_index, flag_vectors

A = AffineArrangement(
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]] * 2,
    [0, 0, 0, 1, 1, 1],
)
print(f"chi(t) = {characteristic_polynomial(A)}")
print(f"regions: {region_counts(A)}")

L_ub, T_ub, Q = unbounded_structures(A)
print(f"\nPsi(L_ub) = {ab_index(L_ub)}")
print(f"cd-index of unbounded faces, from L_ub:       {psi_unbounded(A)}")
print(f"cd-index of unbounded faces, from sign vectors: {ab_to_cd(ab_index(T_ub))}")

lhs = ab_index(T_ub).star() * A_MINUS_B
print(f"\nPsi(T_ub)* (a-b) = {lhs}")
print(f"Psi(Q)           = {ab_index(Q)}")

print("\nflag f-vector of T_ub (each f_S divisible by 2^|S|):")
for S, f, _ in flag_vectors(T_ub).table():
    print(f"  S={set(S) or '{}'}  f={f}  f/2^|S|={f // 2 ** len(S)}")
