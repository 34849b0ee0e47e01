"""Line arrangements on the torus R^2 / Z^2.

The first arrangement cuts the torus into three regions that are not
regular cells; the second gives a regular subdivision, and its cd-index
formula matches a direct construction of the cell complex.

Run: python3 demos/04_toric_arrangements.py
"""

from pathlib import Path

from cdindex.arrangement_toric import (
    chi_by_lattice_points,
    intersection_poset,
    n_of_arrangement,
    psi_toric,
    toric_characteristic_polynomial,
    toric_f_vector,
    toric_face_poset_2d,
    toric_region_count,
)
from cdindex.cli import render_manifold_psi
from cdindex.fileformats import load
from cdindex.oracle import ab_index_by_chains
from cdindex.poset import ab_index, flag_vectors

DATA = Path(__file__).resolve().parent.parent / "data"

for name in ("example1.toric", "example2.toric"):
    A = load(DATA / name)
    chi = toric_characteristic_polynomial(A)
    N = n_of_arrangement(A)
    print(f"== {name}: {', '.join(str(H) for H in A.hyperplanes)}")
    print(f"chi(t) = {chi}, regions = {toric_region_count(A)}, N = {N}")
    for q in (N, 2 * N, 3 * N):
        print(f"  q = {q:2d}: grid points off the lines {chi_by_lattice_points(A, q)}, chi(q) = {chi(q)}")
    P = intersection_poset(A)
    print(f"intersection poset: {[str(S) for S in P.labels]}")
    print(f"Psi(P) = {ab_index(P)}")
    sub = toric_face_poset_2d(A)
    print(f"cells (vertices, edges, regions) = {sub.f_vector()}, formula {toric_f_vector(A)}")
    if sub.regular:
        psi = psi_toric(A)
        print(f"psi from the lattice:   {render_manifold_psi(psi, 0)}")
        print(f"  as an ab-polynomial   {psi}")
        print(f"psi of the subdivision: {ab_index_by_chains(sub.poset)}")
        for S, f, h in flag_vectors(sub.poset).table():
            print(f"  S={set(S) or '{}'}  f={f}  h={h}")
    else:
        print("subdivision is not regular:")
        for p in sub.problems:
            print(f"  {p}")
    print()
