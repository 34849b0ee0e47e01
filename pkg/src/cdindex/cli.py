"""Command-line front end.

Usage: ``cdindex <verb> <file> [--q N] [--at R] [--via METHOD] [--format text|json]``.
Exit status is 0 on success, 1 on a domain error or a failed check and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import oracle
from .arrangement_euclid import (
    AffineArrangement,
    characteristic_polynomial,
    face_poset_central,
    fiber_cardinality_central,
    fiber_cardinality_unbounded,
    intersection_lattice,
    psi_central,
    psi_unbounded,
    region_counts,
    unbounded_structures,
)
from .arrangement_toric import (
    ToricArrangement,
    chi_by_lattice_points,
    fiber_cardinality_toric,
    intersection_poset,
    n_of_arrangement,
    psi_toric,
    toric_characteristic_polynomial,
    toric_f_vector,
    toric_face_poset_2d,
    toric_region_count,
    zero_map_2d,
)
from .fileformats import load
from .graphs import (
    SimpleGraph,
    acyclic_orientations,
    chromatic_polynomial,
    graphical_arrangement,
    toric_graphical_region_count,
    unique_sink_acyclic_orientations,
)
from .ncpoly import A_MINUS_B, AbPoly, ab_to_cd
from .poset import (
    GradedPoset,
    ab_index,
    decompose_manifold_psi,
    dual,
    flag_vectors,
    is_eulerian,
    zaslavsky_invariants,
)

VERBS = (
    "abindex",
    "cdindex",
    "flag",
    "zaslavsky",
    "chi",
    "regions",
    "psi-central",
    "psi-unbounded",
    "psi-toric",
    "fvector-toric",
    "fibers",
    "graph-regions",
    "verify",
)

Check = Tuple[str, bool, str]


class DomainError(ValueError):
    """Input is well formed but the requested computation does not apply."""


def render_manifold_psi(psi: AbPoly, euler_char: int) -> str:
    """Render psi as c1*(a-b)^m + c2*c^m + Phi."""
    m = psi.degree()
    c1, c2, Phi = decompose_manifold_psi(psi, euler_char)
    parts = []
    for coeff, name in ((c1, f"(a-b)^{m}"), (c2, f"c^{m}")):
        if coeff:
            parts.append(name if coeff == 1 else f"{coeff}*{name}")
    if Phi:
        parts.append(str(Phi))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _need(obj, kind, verb):
    if not isinstance(obj, kind):
        raise DomainError(f"{verb} needs a {kind.__name__} input, got {type(obj).__name__}")


def _base_poset(obj) -> GradedPoset:
    if isinstance(obj, GradedPoset):
        return obj
    if isinstance(obj, AffineArrangement):
        return intersection_lattice(obj)
    if isinstance(obj, ToricArrangement):
        return intersection_poset(obj)
    raise DomainError(f"no poset attached to a {type(obj).__name__} input")


def _label(P: GradedPoset, x: int) -> str:
    return str(P.labels[x])


def _chain_text(P: GradedPoset, chain) -> str:
    return "0̂ < " + " < ".join(_label(P, x) for x in chain)


# ---------------------------------------------------------------------------
# verbs


def cmd_abindex(obj, args) -> str:
    via = args.via or "chains"
    if via == "moebius":
        raise DomainError("the ab-index is computed via chains, stanley or flag_h")
    return str(ab_index(_base_poset(obj), via=via))


def cmd_cdindex(obj, args) -> str:
    P = _base_poset(obj)
    if not is_eulerian(P):
        raise DomainError("poset is not Eulerian, so its ab-index has no cd-form")
    return str(ab_to_cd(ab_index(P)))


def cmd_flag(obj, args) -> List[str]:
    fv = flag_vectors(_base_poset(obj))
    rows = []
    for S, f, h in fv.table():
        name = "{" + ",".join(map(str, S)) + "}"
        rows.append(f"{name} f={f} h={h}")
    return rows


def cmd_zaslavsky(obj, args) -> Dict[str, int]:
    return zaslavsky_invariants(_base_poset(obj))._asdict()


def cmd_chi(obj, args):
    if isinstance(obj, AffineArrangement):
        p = characteristic_polynomial(obj)
    elif isinstance(obj, ToricArrangement):
        p = toric_characteristic_polynomial(obj)
    elif isinstance(obj, SimpleGraph):
        p = chromatic_polynomial(obj)
    else:
        raise DomainError("chi needs an arrangement or a graph")
    if args.at is not None:
        return str(p(Fraction(args.at)))
    return str(p)


def cmd_regions(obj, args):
    if isinstance(obj, AffineArrangement):
        return region_counts(obj)._asdict()
    if isinstance(obj, ToricArrangement):
        return str(toric_region_count(obj))
    if isinstance(obj, SimpleGraph):
        return str(toric_graphical_region_count(obj))
    raise DomainError("regions needs an arrangement or a graph")


def cmd_psi_central(obj, args) -> str:
    _need(obj, AffineArrangement, "psi-central")
    if not obj.is_central():
        raise DomainError("arrangement is not central (required for the face lattice formula of central arrangements)")
    return str(psi_central(obj))


def cmd_psi_unbounded(obj, args) -> str:
    _need(obj, AffineArrangement, "psi-unbounded")
    if obj.is_central():
        raise DomainError("arrangement is central; the unbounded-face formula needs a non-central one")
    return str(psi_unbounded(obj))


def cmd_psi_toric(obj, args) -> str:
    _need(obj, ToricArrangement, "psi-toric")
    if obj.n == 2:
        sub = toric_face_poset_2d(obj)
        if not sub.regular:
            raise DomainError(
                "induced subdivision is not regular (the toric cd-index formula requires it): "
                + "; ".join(sub.problems[:3])
            )
    try:
        psi = psi_toric(obj)
    except ArithmeticError as e:
        raise DomainError(str(e)) from None
    return render_manifold_psi(psi, 0)


def cmd_fvector_toric(obj, args) -> str:
    _need(obj, ToricArrangement, "fvector-toric")
    via = args.via or "moebius"
    if via not in ("moebius", "flag_h"):
        raise DomainError("fvector-toric is computed via moebius or flag_h")
    return " ".join(map(str, toric_f_vector(obj, via=via)))


def cmd_fibers(obj, args) -> List[str]:
    rows = []
    if isinstance(obj, AffineArrangement):
        L = intersection_lattice(obj)
        central = obj.is_central()
        fn = fiber_cardinality_central if central else fiber_cardinality_unbounded
        for c in sorted(oracle.chains_ending_at_top(L), key=lambda c: (len(c), c)):
            if central or len(c) >= 2:
                rows.append(f"{_chain_text(L, c)}: {fn(L, c)}")
    elif isinstance(obj, ToricArrangement):
        P = intersection_poset(obj)
        for c in sorted(oracle.chains_ending_at_top(P), key=lambda c: (len(c), c)):
            if len(c) >= 2:
                rows.append(f"{_chain_text(P, c)}: {fiber_cardinality_toric(P, c)}")
    else:
        raise DomainError("fibers needs an arrangement")
    return rows


def cmd_graph_regions(obj, args) -> str:
    _need(obj, SimpleGraph, "graph-regions")
    return str(toric_graphical_region_count(obj))


# ---------------------------------------------------------------------------
# verify


def _check(name: str, expected, got) -> Check:
    return (name, expected == got, f"{expected} vs {got}")


def _verify_poset(P: GradedPoset) -> List[Check]:
    psi = ab_index(P, "chains")
    out = [
        _check("ab-index: chains = stanley", psi, ab_index(P, "stanley")),
        _check("ab-index: chains = flag h", psi, ab_index(P, "flag_h")),
        _check("ab-index: chains = oracle enumeration", psi, oracle.ab_index_by_chains(P)),
    ]
    if is_eulerian(P):
        try:
            ab_to_cd(psi)
            out.append(("Eulerian poset has a cd-index", True, ""))
        except ValueError as e:
            out.append(("Eulerian poset has a cd-index", False, str(e)))
    return out


def _verify_affine(A: AffineArrangement) -> List[Check]:
    L = intersection_lattice(A)
    out = _verify_poset(L)
    chi = characteristic_polynomial(A)
    regions, bounded = oracle.region_census(A)
    out.append(_check("regions: (-1)^n chi(-1) = sign vectors", regions, (-1) ** A.n * chi(-1)))
    out.append(_check("bounded: (-1)^n chi(1) = sign vectors", bounded, (-1) ** A.n * chi(1)))
    if A.is_central():
        T = face_poset_central(A)
        out.append(_check("psi-central: formula = face poset", psi_central(A), ab_to_cd(ab_index(T))))
        out.append(_check("psi-central: omega path = phi path", psi_central(A), psi_central(A, via="phi")))
        D = dual(T)
        counts = oracle.z_fiber_counts(D, oracle.zero_map_faces(A, D, L))
        bad = [c for c in oracle.chains_ending_at_top(L) if counts.get(c, 0) != fiber_cardinality_central(L, c)]
        out.append(("fibers: formula = brute force (central)", not bad, f"{len(bad)} mismatches"))
    else:
        L_ub, T_ub, Q = unbounded_structures(A)
        psi_ub = ab_index(T_ub)
        out.append(_check("psi-unbounded: formula = face poset", psi_unbounded(A), ab_to_cd(psi_ub)))
        out.append(_check("Psi(T_ub)* (a-b) = Psi(Q)", psi_ub.star() * A_MINUS_B, ab_index(Q)))
        counts = oracle.z_fiber_counts(Q, oracle.zero_map_faces(A, Q, L))
        bad = [
            c for c in oracle.chains_ending_at_top(L)
            if len(c) >= 2 and counts.get(c, 0) != fiber_cardinality_unbounded(L, c)
        ]
        out.append(("fibers: formula = brute force (unbounded)", not bad, f"{len(bad)} mismatches"))
        fv = flag_vectors(T_ub)
        odd = [S for S, f in fv.f.items() if f % 2 ** len(S)]
        out.append(("f_S(T_ub) divisible by 2^|S|", not odd, f"failing S: {sorted(map(sorted, odd))}"))
    return out


def _verify_toric(A: ToricArrangement, q: Optional[int]) -> List[Check]:
    P = intersection_poset(A)
    out = _verify_poset(P)
    chi = toric_characteristic_polynomial(A)
    N = n_of_arrangement(A)
    qs = [q] if q else [k * N for k in (1, 2, 3) if k * N <= oracle.MAX_Q]
    for qq in qs:
        if qq ** A.n <= 10 ** 6:
            off, _ = oracle.grid_census(A, qq)
            out.append(_check(f"chi({qq}) = grid census", chi(qq), off))
        out.append(_check(f"chi({qq}) = lattice points", chi(qq), chi_by_lattice_points(A, qq)))
    out.append(_check("regions: (-1)^n chi(0) = Z_t", (-1) ** A.n * chi(0), zaslavsky_invariants(P).Zt))
    out.append(_check("f-vector: moebius = flag h", toric_f_vector(A, "moebius"), toric_f_vector(A, "flag_h")))
    if A.n == 2:
        sub = toric_face_poset_2d(A)
        out.append(_check("f-vector = subdivision oracle", toric_f_vector(A), sub.f_vector()))
        if sub.regular:
            psi = psi_toric(A)
            out.append(_check("psi-toric: formula = subdivision oracle", psi, ab_index(sub.poset)))
            out.append(_check("psi-toric: omega path = phi_t path", psi, psi_toric(A, via="phi_t")))
            D = dual(sub.poset)
            z = zero_map_2d(sub, A, P)
            counts = oracle.z_fiber_counts(D, z)
            bad = [
                c for c in oracle.chains_ending_at_top(P)
                if len(c) >= 2 and counts.get(c, 0) != fiber_cardinality_toric(P, c)
            ]
            out.append(("fibers: formula = brute force (toric)", not bad, f"{len(bad)} mismatches"))
        else:
            out.append(("subdivision is regular", False, "; ".join(sub.problems[:3])))
    return out


def _verify_graph(G: SimpleGraph) -> List[Check]:
    chi = chromatic_polynomial(G)
    out = [
        _check("chromatic = arrangement chi", chi, characteristic_polynomial(graphical_arrangement(G))),
        _check("(-1)^n chi(-1) = acyclic orientations", (-1) ** G.n * chi(-1), acyclic_orientations(G)),
    ]
    if G.is_connected():
        count = toric_graphical_region_count(G)
        for v in range(G.n):
            out.append(_check(f"regions = unique-sink orientations at {v + 1}", count,
                              unique_sink_acyclic_orientations(G, v)))
    return out


def cmd_verify(obj, args) -> List[Check]:
    if isinstance(obj, GradedPoset):
        return _verify_poset(obj)
    if isinstance(obj, AffineArrangement):
        return _verify_affine(obj)
    if isinstance(obj, ToricArrangement):
        return _verify_toric(obj, args.q)
    return _verify_graph(obj)


COMMANDS: Dict[str, Callable] = {
    "abindex": cmd_abindex,
    "cdindex": cmd_cdindex,
    "flag": cmd_flag,
    "zaslavsky": cmd_zaslavsky,
    "chi": cmd_chi,
    "regions": cmd_regions,
    "psi-central": cmd_psi_central,
    "psi-unbounded": cmd_psi_unbounded,
    "psi-toric": cmd_psi_toric,
    "fvector-toric": cmd_fvector_toric,
    "fibers": cmd_fibers,
    "graph-regions": cmd_graph_regions,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdindex", description="ab- and cd-indexes of posets and arrangements")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", help="poset, affine, toric or graph file")
    p.add_argument("--q", type=int, help="grid resolution for lattice-point checks")
    p.add_argument("--at", help="evaluate the characteristic polynomial at this rational")
    p.add_argument("--via", choices=["moebius", "flag_h", "chains", "stanley"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    return p


def _as_text(result) -> str:
    if isinstance(result, dict):
        return "\n".join(f"{k} {v}" for k, v in result.items())
    if isinstance(result, list):
        return "\n".join(result)
    return str(result)


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.at is not None:
        try:
            Fraction(args.at)
        except (ValueError, ZeroDivisionError):
            print(f"cdindex: --at expects a rational, got {args.at!r}", file=err)
            return 2
    try:
        obj = load(args.input)
        result = COMMANDS[args.verb](obj, args)
    except OSError as e:
        print(f"cdindex: {e}", file=err)
        return 1
    except (ValueError, ArithmeticError) as e:
        print(f"cdindex: {e}", file=err)
        return 1

    checks: List[Check] = []
    if args.verb == "verify":
        checks, result = result, None
    if args.format == "json":
        payload = {
            "input": args.input,
            "operation": args.verb,
            "result": result,
            "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in checks],
        }
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    elif checks:
        for n, ok, d in checks:
            print(f"{'PASS' if ok else 'FAIL'} {n}" + ("" if ok else f" ({d})"), file=out)
    else:
        print(_as_text(result), file=out)
    return 0 if all(ok for _, ok, _ in checks) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
