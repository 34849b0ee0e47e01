"""Exact flag-vector invariants of posets and hyperplane arrangements.

Submodules:
    ncpoly: ab- and cd-polynomials and the operators acting on them.
    poset: graded posets, Möbius functions, flag vectors and ab-indices.
    arrangement_euclid: real arrangements, their lattices and face posets.
    arrangement_toric: arrangements on the torus R^n / Z^n.
    graphs: graphical arrangements and orientation counts.
    oracle: brute-force reference computations used in tests.
"""

__version__ = "0.1.0"
