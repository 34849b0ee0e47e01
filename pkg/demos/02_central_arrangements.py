"""Central arrangements: lattice, characteristic polynomial and the face cd-index.

The face poset is built twice: once from the intersection lattice alone and
once by enumerating sign vectors.  The zero map from faces to flats has
fibers whose sizes are products of region counts of lattice intervals.

Run: python3 demos/02_central_arrangements.py
"""

from cdindex.arrangement_euclid import (
    AffineArrangement,
    characteristic_polynomial,
    face_poset_central,
    fiber_cardinality_central,
    intersection_lattice,
    psi_central,
    region_counts,
)
from cdindex.ncpoly import ab_to_cd
from cdindex.oracle import chains_ending_at_top, z_fiber_counts, zero_map_faces
from cdindex.poset import ab_index, dual

# x = 0, y = 0, z = 0, x = y and y = z in R^3
A = AffineArrangement(
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1]],
    [0, 0, 0, 0, 0],
)
L = intersection_lattice(A)
print(f"{len(A)} planes through the origin in R^3; lattice has {len(L)} flats")
print(f"chi(t) = {characteristic_polynomial(A)}")
print(f"regions: {region_counts(A).regions}")

T = face_poset_central(A)
print(f"\ncd-index from the lattice      {psi_central(A)}")
print(f"cd-index via phi               {psi_central(A, via='phi')}")
print(f"cd-index of the face poset     {ab_to_cd(ab_index(T))}")

D = dual(T)
counts = z_fiber_counts(D, zero_map_faces(A, D, L))
print("\nfibers of the zero map, counted vs predicted:")
for chain in sorted(chains_ending_at_top(L), key=len)[:8]:
    names = " < ".join(str(L.labels[x]) for x in chain)
    print(f"  {names}: {counts.get(chain, 0)} vs {fiber_cardinality_central(L, chain)}")
