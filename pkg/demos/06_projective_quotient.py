"""The projective plane as the antipodal quotient of the octahedron.

A centrally symmetric sphere with cd-index c^(n+1) + Phi has a quotient whose
ab-index is ((a-b)^(n+1) + c^(n+1)) / 2 + Phi / 2.  Here the quotient is also
built directly by identifying antipodal faces.

Run: python3 demos/06_projective_quotient.py
"""

from cdindex.ncpoly import ab_to_cd
from cdindex.oracle import ab_index_by_chains
from cdindex.poset import GradedPoset, ab_index, manifold_decomposition, polytope_face_lattice, projective_quotient_psi

octahedron = polytope_face_lattice(
    [[(0, a), (1, b), (2, c)] for a in (1, -1) for b in (1, -1) for c in (1, -1)]
)
sphere = ab_to_cd(ab_index(octahedron))
print(f"octahedron: cd-index {sphere}")
print(f"half-sum formula for the quotient: {projective_quotient_psi(sphere, 2)}")

# identify each face with its antipode
classes = {}
for x, face in enumerate(octahedron.labels):
    if x not in (octahedron.bottom, octahedron.top):
        key = frozenset([face, frozenset((i, -s) for i, s in face)])
        classes.setdefault(key, []).append(x)
keys = list(classes)
top = len(keys) + 1
ranks = [0] + [octahedron.ranks[classes[k][0]] for k in keys] + [octahedron.rank]
covers = set()
for i, k in enumerate(keys, start=1):
    if ranks[i] == 1:
        covers.add((0, i))
    if ranks[i] == octahedron.rank - 1:
        covers.add((i, top))
    for j, m in enumerate(keys, start=1):
        if any(y in octahedron.upper_covers(x) for x in classes[k] for y in classes[m]):
            covers.add((i, j))
hemi = GradedPoset(ranks, sorted(covers))
print(f"hemi-octahedron: {[len(hemi.of_rank(r)) for r in range(1, 4)]} vertices, edges, triangles")
print(f"ab-index by chain enumeration:     {ab_index_by_chains(hemi)}")

dec = manifold_decomposition(hemi, 1)
print(f"with Euler characteristic 1: c1 = {dec.c1}, c2 = {dec.c2}, Phi = {dec.Phi}")
