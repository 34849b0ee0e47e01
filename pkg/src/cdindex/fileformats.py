"""Plain-text formats for posets, arrangements and graphs.

Blank lines and ``#`` comments are ignored everywhere.  Every parse error
names the offending line.

Formats::

    poset <n_elements> <rank>      affine <n>           toric <n>          graph <n>
    <id> <rank>   (n lines)        a1 ... an | b        a1 ... an | p/q    u v   (1-indexed)
    <id> < <id>   (covers)
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from .arrangement_euclid import AffineArrangement, ArrangementError
from .arrangement_toric import ToricArrangement, ToricError, ToricHyperplane
from .graphs import GraphError, SimpleGraph
from .poset import GradedPoset, PosetError

__all__ = [
    "FormatError",
    "parse_text",
    "load",
    "parse_poset",
    "parse_affine",
    "parse_toric",
    "parse_graph",
    "format_poset",
    "format_affine",
    "format_toric",
    "format_graph",
]

Parsed = Union[GradedPoset, AffineArrangement, ToricArrangement, SimpleGraph]


class FormatError(ValueError):
    """Malformed input file."""


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected an integer, got {tok!r}") from None


def _rational(tok: str, no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {no}: expected a rational p/q, got {tok!r}") from None


def parse_poset(text: str) -> GradedPoset:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "poset" or len(lines[0][1]) != 3:
        raise FormatError("line 1: expected header 'poset <n_elements> <rank>'")
    hno, head = lines[0]
    n, rank = _int(head[1], hno), _int(head[2], hno)
    if len(lines) - 1 < n:
        raise FormatError(f"line {hno}: header promises {n} elements, file has fewer lines")
    ids: List[str] = []
    pos = {}
    ranks = []
    for no, toks in lines[1 : n + 1]:
        if len(toks) != 2:
            raise FormatError(f"line {no}: expected '<id> <rank>'")
        if toks[0] in pos:
            raise FormatError(f"line {no}: element {toks[0]!r} declared twice")
        pos[toks[0]] = len(ids)
        ids.append(toks[0])
        ranks.append(_int(toks[1], no))
    if max(ranks) != rank:
        raise FormatError(f"line {hno}: header rank {rank} but largest element rank is {max(ranks)}")
    covers = []
    for no, toks in lines[n + 1 :]:
        if len(toks) != 3 or toks[1] != "<":
            raise FormatError(f"line {no}: expected '<id> < <id>'")
        for t in (toks[0], toks[2]):
            if t not in pos:
                raise FormatError(f"line {no}: unknown element {t!r}")
        x, y = pos[toks[0]], pos[toks[2]]
        if ranks[y] - ranks[x] != 1:
            raise FormatError(f"line {no}: {toks[0]} < {toks[2]} does not raise the rank by one")
        covers.append((x, y))
    try:
        return GradedPoset(ranks, covers, ids)
    except PosetError as e:
        raise FormatError(f"poset: {e}") from None


def _hyperplane_lines(lines, n: int):
    out = []
    for no, toks in lines[1:]:
        if "|" not in toks:
            raise FormatError(f"line {no}: expected 'a1 ... a{n} | b'")
        k = toks.index("|")
        if k != n or len(toks) != n + 2:
            raise FormatError(f"line {no}: expected {n} coefficients, a '|' and one offset")
        out.append(([_int(t, no) for t in toks[:n]], _rational(toks[-1], no), no))
    return out


def _header(lines, word: str) -> int:
    if not lines or lines[0][1][0] != word or len(lines[0][1]) != 2:
        raise FormatError(f"line 1: expected header '{word} <n>'")
    n = _int(lines[0][1][1], lines[0][0])
    if n < 1:
        raise FormatError(f"line {lines[0][0]}: dimension must be positive")
    return n


def parse_affine(text: str) -> AffineArrangement:
    lines = _lines(text)
    n = _header(lines, "affine")
    rows = _hyperplane_lines(lines, n)
    for a, _, no in rows:
        if not any(a):
            raise FormatError(f"line {no}: zero normal vector")
    try:
        return AffineArrangement([a for a, _, _ in rows], [b for _, b, _ in rows], n)
    except ArrangementError as e:
        raise FormatError(f"affine arrangement: {e}") from None


def parse_toric(text: str) -> ToricArrangement:
    lines = _lines(text)
    n = _header(lines, "toric")
    hyper = []
    seen = {}
    for a, b, no in _hyperplane_lines(lines, n):
        if not any(a):
            raise FormatError(f"line {no}: zero normal vector")
        H = ToricHyperplane.make(a, b)
        if H in seen:
            raise FormatError(f"line {no}: same toric hyperplane as line {seen[H]}")
        seen[H] = no
        hyper.append(H)
    try:
        return ToricArrangement(hyper, n)
    except ToricError as e:
        raise FormatError(f"toric arrangement: {e}") from None


def parse_graph(text: str) -> SimpleGraph:
    lines = _lines(text)
    n = _header(lines, "graph")
    edges = []
    for no, toks in lines[1:]:
        if len(toks) != 2:
            raise FormatError(f"line {no}: expected 'u v'")
        u, v = _int(toks[0], no), _int(toks[1], no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"line {no}: vertices must lie in 1..{n}")
        edges.append((u - 1, v - 1))
    try:
        return SimpleGraph.make(n, edges)
    except GraphError as e:
        raise FormatError(f"graph: {e}") from None


_PARSERS = {"poset": parse_poset, "affine": parse_affine, "toric": parse_toric, "graph": parse_graph}


def parse_text(text: str) -> Parsed:
    """Parse any of the four formats, dispatching on the header word."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    word = lines[0][1][0]
    if word not in _PARSERS:
        raise FormatError(f"line {lines[0][0]}: unknown header {word!r}; expected one of {sorted(_PARSERS)}")
    return _PARSERS[word](text)


def load(path: Union[str, Path]) -> Parsed:
    return parse_text(Path(path).read_text())


def format_poset(P: GradedPoset) -> str:
    ids = [str(l).replace(" ", "_") for l in P.labels]
    if len(set(ids)) != len(ids):
        ids = [str(i) for i in P.elements()]
    out = [f"poset {len(P)} {P.rank}"]
    out += [f"{ids[x]} {P.ranks[x]}" for x in P.order]
    out += [f"{ids[x]} < {ids[y]}" for x, y in P.covers]
    return "\n".join(out) + "\n"


def _fmt_hyper(a, b) -> str:
    return " ".join(str(x) for x in a) + f" | {b}"


def format_affine(A: AffineArrangement) -> str:
    return "\n".join([f"affine {A.n}"] + [_fmt_hyper(a, b) for a, b in A.hyperplanes]) + "\n"


def format_toric(A: ToricArrangement) -> str:
    return "\n".join([f"toric {A.n}"] + [_fmt_hyper(H.normal, H.offset) for H in A.hyperplanes]) + "\n"


def format_graph(G: SimpleGraph) -> str:
    return "\n".join([f"graph {G.n}"] + [f"{u + 1} {v + 1}" for u, v in G.sorted_edges()]) + "\n"
