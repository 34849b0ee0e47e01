"""Flag vectors, ab-indexes and cd-indexes of small graded posets.

Run: python3 demos/01_posets.py
"""

from cdindex.ncpoly import ab_to_cd
from cdindex.poset import (
    ab_index,
    boolean_lattice,
    butterfly,
    flag_vectors,
    is_eulerian,
    random_graded_poset,
    zaslavsky_invariants,
)


def show_flags(name, P):
    print(f"{name}: rank {P.rank}, {len(P)} elements")
    for S, f, h in flag_vectors(P).table():
        print(f"  S={set(S) or '{}'}  f={f}  h={h}")
    print(f"  ab-index  {ab_index(P)}")


# The Boolean lattice B3 is Eulerian, so its ab-index rewrites in c and d.
B3 = boolean_lattice(3)
show_flags("B3", B3)
print(f"  Eulerian: {is_eulerian(B3)}, cd-index {ab_to_cd(ab_index(B3))}\n")

# Butterflies have cd-index c^(k-1).
for k in (2, 3, 4):
    print(f"butterfly of rank {k}: cd-index {ab_to_cd(ab_index(butterfly(k)))}")
print()

# A random poset has no cd-index in general, but its three ab-index
# computations always agree.
P = random_graded_poset(24)
routes = {via: ab_index(P, via=via) for via in ("chains", "stanley", "flag_h")}
print(f"random poset: {len(P)} elements, rank {P.rank}")
for via, psi in routes.items():
    print(f"  {via:8s} {psi}")
print(f"  all equal: {len(set(map(str, routes.values()))) == 1}")
print(f"  Zaslavsky invariants: {zaslavsky_invariants(P)}")
