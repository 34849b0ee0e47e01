"""Exact rational and integer linear algebra for small systems.

Everything here works on lists of ``Fraction`` or ``int``; the instances are
tiny (a handful of hyperplanes in dimension <= 4), so clarity wins over speed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]
IntMatrix = List[List[int]]


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else abs(a or b)


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row echelon form over Q.

    Returns ``(R, pivots)`` where ``R`` is the list of nonzero rows (tuples of
    Fractions) and ``pivots`` their pivot columns.  Pivots are chosen as the
    leftmost available column, so the result is canonical.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def _integer_rank(m: List[List[int]]) -> int:
    # fraction-free elimination; entries stay integers
    r = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [p * x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    if all(isinstance(x, int) for row in rows for x in row):
        return _integer_rank([list(row) for row in rows])
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], n: int) -> List[Vector]:
    """Basis of {x : rows @ x = 0} over Q."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    R, piv = rref(rows, n)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_affine(eqs: Sequence[Tuple[Sequence, object]], n: int):
    """Parametrize {x : a.x = b for (a, b) in eqs}.

    Returns ``None`` if inconsistent, else ``(x0, basis)`` with the solution set
    equal to ``x0 + span(basis)``.
    """
    if not eqs:
        return tuple(Fraction(0) for _ in range(n)), nullspace([], n)
    aug = [list(a) + [b] for a, b in eqs]
    R, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x0 = [Fraction(0)] * n
    for row, p in zip(R, piv):
        x0[p] = row[n]
    return tuple(x0), nullspace([a for a, _ in eqs], n)


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _normalize(coeffs: Sequence[Fraction], const: Fraction):
    # scale so that the first nonzero coefficient has absolute value 1
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return tuple(coeffs), const
    s = abs(lead)
    return tuple(c / s for c in coeffs), const / s


def _fm_feasible(ineqs, nvars: int) -> bool:
    # ineqs: list of (coeffs, const, strict) meaning coeffs.x + const > 0 (or >= 0)
    rows = {}
    for coeffs, const, strict in ineqs:
        key = _normalize(coeffs, const)
        rows[key] = rows.get(key, False) or strict
    for j in range(nvars):
        pos, neg, rest = [], [], []
        for (coeffs, const), strict in rows.items():
            if coeffs[j] > 0:
                pos.append((coeffs, const, strict))
            elif coeffs[j] < 0:
                neg.append((coeffs, const, strict))
            else:
                rest.append((coeffs, const, strict))
        new = {}
        for coeffs, const, strict in rest:
            key = (coeffs, const)
            new[key] = new.get(key, False) or strict
        for pc, pk, ps in pos:
            for nc, nk, ns in neg:
                fp, fn = -nc[j], pc[j]
                coeffs = tuple(fp * x + fn * y for x, y in zip(pc, nc))
                const = fp * pk + fn * nk
                key = _normalize(coeffs, const)
                new[key] = new.get(key, False) or ps or ns
        rows = new
        # drop rows that are trivially satisfied and detect trivial violations
        pruned = {}
        for (coeffs, const), strict in rows.items():
            if all(c == 0 for c in coeffs):
                if const < 0 or (strict and const == 0):
                    return False
                continue
            pruned[(coeffs, const)] = strict
        rows = pruned
    return True


def feasible(eqs, ineqs, n: int) -> bool:
    """Exact feasibility of a mixed system over Q^n.

    Args:
        eqs: pairs ``(a, b)`` meaning ``a.x = b``.
        ineqs: triples ``(a, b, strict)`` meaning ``a.x > b`` (strict) or
            ``a.x >= b``.
        n: number of variables.
    """
    sol = solve_affine(eqs, n)
    if sol is None:
        return False
    x0, basis = sol
    k = len(basis)
    reduced = []
    for a, b, strict in ineqs:
        a = [Fraction(x) for x in a]
        coeffs = tuple(sum(ai * vi for ai, vi in zip(a, v)) for v in basis)
        const = sum(ai * xi for ai, xi in zip(a, x0)) - Fraction(b)
        reduced.append((coeffs, const, strict))
    if k == 0:
        return all(c > 0 or (not s and c == 0) for _, c, s in reduced)
    return _fm_feasible(reduced, k)


# ---------------------------------------------------------------------------
# integer matrices


def _copy(M) -> IntMatrix:
    return [list(map(int, r)) for r in M]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B) -> IntMatrix:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def smith_normal_form(M):
    """Smith normal form with unimodular transforms.

    Returns ``(U, D, V)`` with ``U @ M @ V == D``, ``D`` diagonal with
    nonnegative entries, each dividing the next.
    """
    A = _copy(M)
    r = len(A)
    c = len(A[0]) if r else 0
    U = _identity(r)
    V = _identity(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row dst += f * row src
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    t = 0
    while t < min(r, c):
        nz = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % A[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def elementary_divisors(M) -> List[int]:
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def hermite_normal_form(M):
    """Row-style Hermite normal form.

    Returns ``(H, K)`` with ``K @ M == H``, ``K`` unimodular, ``H`` in row
    echelon form with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``.  Zero rows are kept at the bottom.
    """
    A = _copy(M)
    r = len(A)
    c = len(A[0]) if r else 0
    K = _identity(r)
    row = 0
    for col in range(c):
        if row == r:
            break
        while True:
            nz = [i for i in range(row, r) if A[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[row], A[p] = A[p], A[row]
            K[row], K[p] = K[p], K[row]
            cleared = True
            for i in range(row + 1, r):
                if A[i][col]:
                    q = A[i][col] // A[row][col]
                    A[i] = [x - q * y for x, y in zip(A[i], A[row])]
                    K[i] = [x - q * y for x, y in zip(K[i], K[row])]
                    if A[i][col]:
                        cleared = False
            if cleared:
                break
        if not A[row][col]:
            continue
        if A[row][col] < 0:
            A[row] = [-x for x in A[row]]
            K[row] = [-x for x in K[row]]
        for i in range(row):
            q = A[i][col] // A[row][col]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[row])]
                K[i] = [x - q * y for x, y in zip(K[i], K[row])]
        row += 1
    return A, K


def integer_inverse(M) -> IntMatrix:
    """Inverse of a unimodular integer matrix.

    The Hermite form of a unimodular matrix is the identity, so the transform
    that produces it is the inverse.
    """
    n = len(M)
    H, K = hermite_normal_form(M)
    if any(not any(row) for row in H):
        raise ValueError("matrix is singular")
    if H != _identity(n):
        raise ValueError("matrix is not unimodular")
    return K


def determinant(M) -> int:
    """Exact determinant via fraction elimination."""
    n = len(M)
    m = [[Fraction(x) for x in r] for r in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return int(det)


def primitive(v: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Divide an integer vector by the gcd of its entries; returns (vector, gcd)."""
    g = reduce(gcd, (abs(int(x)) for x in v), 0)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(int(x) // g for x in v), g


def format_linear(coeffs: Sequence) -> str:
    """Readable linear form, e.g. ``x1 - 2*x3``."""
    out = ""
    for j, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        term = f"x{j + 1}" if mag == 1 else f"{mag}*x{j + 1}"
        if not out:
            out = term if c > 0 else f"-{term}"
        else:
            out += f" + {term}" if c > 0 else f" - {term}"
    return out or "0"


def clear_denominators(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    return primitive(ints)[0]
