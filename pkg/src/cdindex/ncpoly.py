"""Noncommutative polynomials in a, b (and in c, d) with integer coefficients.

Words are plain strings over the alphabet ``"ab"`` (or ``"cd"``); the empty
string is the monomial 1.  Polynomials are immutable sparse maps from words
to Python integers, so arithmetic is exact at any size.

Terms print in graded colex order: by degree, then by comparing the reversed
words.  For ab-words this lists ``u_S`` in the order of the subset ``S`` read
as a binary number, e.g. ``1*aa + 2*ba + 6*ab + 6*bb``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple

__all__ = [
    "AbPoly",
    "CdPoly",
    "TensorSum",
    "NotCdExpressible",
    "MixedDegreeError",
    "words",
    "coproduct",
    "coproduct_k",
    "coproduct_k_recursive",
    "omega",
    "kappa",
    "beta",
    "eta",
    "lambda_t",
    "lambda_ub",
    "h_prime",
    "r_map",
    "phi",
    "phi_by_coproduct",
    "phi_t",
    "phi_t_by_coproduct",
    "phi_t_closed_form",
    "phi_ub",
    "phi_ub_by_coproduct",
    "phi_ub_by_lemma",
    "cd_expand",
    "ab_to_cd",
    "a_minus_b_power",
    "c_power",
    "butterfly_rhs",
    "halve",
]


class MixedDegreeError(ValueError):
    """Raised when an operation needs a homogeneous polynomial."""


class NotCdExpressible(ValueError):
    """Raised by :func:`ab_to_cd` when no cd-form exists.

    The uneliminable remainder is kept on ``residual``.
    """

    def __init__(self, residual: "AbPoly"):
        super().__init__(f"not in the span of c and d; residual {residual}")
        self.residual = residual


def words(n: int, alphabet: str = "ab") -> Iterator[str]:
    """All words of length ``n`` over ``alphabet`` in lexicographic order."""
    for letters in itertools.product(alphabet, repeat=n):
        yield "".join(letters)


class _SparsePoly:
    _alphabet = ""
    _weights: Dict[str, int] = {}

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | Iterable[Tuple[str, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[str, int] = {}
        for w, c in items:
            if c:
                if w and not set(w) <= set(self._alphabet):
                    raise ValueError(f"word {w!r} is not over {self._alphabet!r}")
                clean[w] = clean.get(w, 0) + int(c)
        self._terms = {w: c for w, c in clean.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def one(cls):
        return cls({"": 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, word: str, coeff: int = 1):
        return cls({word: coeff})

    # container protocol
    def terms(self) -> Dict[str, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda wc: self._order_key(wc[0]))

    def coefficient(self, word: str) -> int:
        return self._terms.get(word, 0)

    def __iter__(self):
        return iter(w for w, _ in self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @classmethod
    def _word_degree(cls, w: str) -> int:
        return sum(cls._weights[x] for x in w)

    @classmethod
    def _order_key(cls, w: str):
        return (cls._word_degree(w), w[::-1])

    def degree(self) -> int:
        """Common degree of all terms.

        Raises:
            MixedDegreeError: if the terms have different degrees.  The zero
                polynomial also has no degree.
        """
        degs = {self._word_degree(w) for w in self._terms}
        if len(degs) != 1:
            raise MixedDegreeError(f"polynomial {self} is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self._word_degree(w) for w in self._terms}) <= 1

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)({"": other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({w: c * other for w, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[str, int] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                out[u + v] = out.get(u + v, 0) + cu * cv
        return type(self)(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = type(self).one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)({"": other})
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def star(self):
        """Reverse every word; an involution and an anti-automorphism."""
        return type(self)({w[::-1]: c for w, c in self._terms.items()})

    def map_words(self, fn: Callable[[str], "_SparsePoly"]):
        out = type(self)()
        for w, c in self._terms.items():
            out = out + fn(w) * c
        return out

    # text format
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.items()):
            word = w or "1"
            if i == 0:
                parts.append(f"{c}*{word}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{word}")
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    _term_re = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*)?\s*([a-z1]+)?\s*")

    @classmethod
    def parse(cls, text: str):
        """Inverse of ``str``.  Also accepts bare words (``ab``) and integers."""
        s = text.strip()
        if s == "0":
            return cls()
        out: Dict[str, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._term_re.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at offset {pos}")
            sign, num, star, word = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing '+' or '-' in {text!r} at offset {pos}")
            if num is None and word is None:
                raise ValueError(f"empty term in {text!r} at offset {pos}")
            if star and (num is None or word is None):
                raise ValueError(f"dangling '*' in {text!r} at offset {pos}")
            coeff = int(num) if num is not None else 1
            if sign == "-":
                coeff = -coeff
            w = "" if word in (None, "1") else word
            if w and not set(w) <= set(cls._alphabet):
                raise ValueError(f"word {word!r} is not over {cls._alphabet!r}")
            out[w] = out.get(w, 0) + coeff
            pos = m.end()
            first = False
        return cls(out)


class AbPoly(_SparsePoly):
    """Element of Z<a,b>."""

    _alphabet = "ab"
    _weights = {"a": 1, "b": 1}
    __slots__ = ()


class CdPoly(_SparsePoly):
    """Element of Z<c,d> with deg c = 1 and deg d = 2."""

    _alphabet = "cd"
    _weights = {"c": 1, "d": 2}
    __slots__ = ()

    def expand(self) -> AbPoly:
        return cd_expand(self)


A = AbPoly.monomial("a")
B = AbPoly.monomial("b")
A_MINUS_B = A - B
C_AB = A + B
D_AB = AbPoly({"ab": 1, "ba": 1})


@lru_cache(maxsize=None)
def a_minus_b_power(m: int) -> AbPoly:
    return A_MINUS_B ** m


@lru_cache(maxsize=None)
def c_power(m: int) -> AbPoly:
    return C_AB ** m


def _require_homogeneous(p: _SparsePoly) -> None:
    if not p.is_homogeneous():
        raise MixedDegreeError(f"polynomial {p} is not homogeneous")


# ---------------------------------------------------------------------------
# coproduct


class TensorSum:
    """Finite formal sum of k-fold tensors of ab-words.

    Stored as a map from k-tuples of words to integer coefficients, which is
    the multiset of Sweedler terms with multiplicities collected.
    """

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: Mapping[Tuple[str, ...], int] = ()):
        self.k = k
        self._terms = {t: c for t, c in dict(terms).items() if c}
        for t in self._terms:
            if len(t) != k:
                raise ValueError(f"term {t} is not a {k}-fold tensor")

    def terms(self) -> Dict[Tuple[str, ...], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def total_count(self) -> int:
        """Number of Sweedler terms counted with multiplicity."""
        return sum(abs(c) for c in self._terms.values())

    def __contains__(self, t):
        return t in self._terms

    def coefficient(self, t: Tuple[str, ...]) -> int:
        return self._terms.get(tuple(t), 0)

    def __eq__(self, other):
        if not isinstance(other, TensorSum):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __repr__(self):
        body = " + ".join(f"{c}*({' ⊗ '.join(w or '1' for w in t)})" for t, c in self.items())
        return f"TensorSum({body or '0'})"

    def apply(self, fn: Callable[..., object], zero=None):
        """Evaluate ``sum coeff * fn(w1, ..., wk)`` over the terms."""
        total = zero
        for t, c in self._terms.items():
            val = fn(*[AbPoly.monomial(w) for w in t]) * c
            total = val if total is None else total + val
        return total


def _split_word(w: str, pieces: int):
    """Yield the tuples of a (pieces-1)-fold deletion split of ``w``."""
    n = len(w)
    for cut in itertools.combinations(range(n), pieces - 1):
        bounds = (-1,) + cut + (n,)
        yield tuple(w[bounds[i] + 1 : bounds[i + 1]] for i in range(pieces))


def coproduct(p: AbPoly) -> TensorSum:
    """Delta(u1...un) = sum_i u1...u(i-1) ⊗ u(i+1)...un, extended linearly."""
    return coproduct_k(p, 2)


def coproduct_k(p: AbPoly, k: int) -> TensorSum:
    """The k-ary coproduct Delta^(k-1): splits each word into k pieces.

    ``coproduct_k(p, 1)`` is the identity (as 1-fold tensors).
    """
    if k < 1:
        raise ValueError("k must be positive")
    out: Dict[Tuple[str, ...], int] = {}
    for w, c in p.terms().items():
        for t in _split_word(w, k):
            out[t] = out.get(t, 0) + c
    return TensorSum(k, out)


def coproduct_k_recursive(p: AbPoly, k: int, side: str = "left") -> TensorSum:
    """Delta^(k-1) built by iterating the binary coproduct.

    ``side="left"`` applies (Delta^(k-2) ⊗ id) ∘ Delta, ``side="right"`` applies
    (id ⊗ Delta^(k-2)) ∘ Delta.  Used to check coassociativity.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return TensorSum(1, {(w,): c for w, c in p.terms().items()})
    out: Dict[Tuple[str, ...], int] = {}
    for (u, v), c in coproduct(p).terms().items():
        if side == "left":
            inner = coproduct_k_recursive(AbPoly.monomial(u), k - 1, side)
            for t, ci in inner.terms().items():
                key = t + (v,)
                out[key] = out.get(key, 0) + c * ci
        else:
            inner = coproduct_k_recursive(AbPoly.monomial(v), k - 1, side)
            for t, ci in inner.terms().items():
                key = (u,) + t
                out[key] = out.get(key, 0) + c * ci
    return TensorSum(k, out)


# ---------------------------------------------------------------------------
# c,d basis


def cd_expand(q: CdPoly) -> AbPoly:
    """Substitute c = a + b and d = ab + ba."""
    out = AbPoly()
    for w, coeff in q.terms().items():
        term = AbPoly.one()
        for x in w:
            term = term * (C_AB if x == "c" else D_AB)
        out = out + term * coeff
    return out


def _cd_word_for_leading(w: str):
    # Under lex order with a < b the largest word in the expansion of a
    # cd-word replaces c -> b and d -> ba.  Decode that image, or return None.
    out = []
    i = 0
    while i < len(w):
        if w[i] != "b":
            return None
        if i + 1 < len(w) and w[i + 1] == "a":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def ab_to_cd(p: AbPoly) -> CdPoly:
    """Rewrite a homogeneous ab-polynomial in c and d.

    Greedy elimination on the lexicographically largest word.

    Raises:
        NotCdExpressible: with the residual when ``p`` has no cd-form.
        MixedDegreeError: if ``p`` is not homogeneous.
    """
    _require_homogeneous(p)
    residual = p
    out: Dict[str, int] = {}
    while residual:
        lead = max(residual.terms())
        cdw = _cd_word_for_leading(lead)
        if cdw is None:
            raise NotCdExpressible(residual)
        coeff = residual.coefficient(lead)
        out[cdw] = coeff
        residual = residual - cd_expand(CdPoly.monomial(cdw)) * coeff
    return CdPoly(out)


def omega(p: AbPoly) -> CdPoly:
    """Replace each ab factor by 2d (left to right, non-overlapping), then a, b by c."""
    _require_homogeneous(p)
    out: Dict[str, int] = {}
    for w, coeff in p.terms().items():
        letters = []
        factor = 1
        i = 0
        while i < len(w):
            if w.startswith("ab", i):
                letters.append("d")
                factor *= 2
                i += 2
            else:
                letters.append("c")
                i += 1
        cw = "".join(letters)
        out[cw] = out.get(cw, 0) + coeff * factor
    return CdPoly(out)


def halve(p: AbPoly) -> AbPoly:
    """Divide by two, insisting every coefficient is even."""
    odd = {w: c for w, c in p.terms().items() if c % 2}
    if odd:
        raise ArithmeticError(f"odd coefficients before halving: {AbPoly(odd)}")
    return AbPoly({w: c // 2 for w, c in p.terms().items()})


# ---------------------------------------------------------------------------
# linear operators on Z<a,b>


def _linear(fn: Callable[[str], AbPoly]) -> Callable[[AbPoly], AbPoly]:
    cached = lru_cache(maxsize=None)(fn)

    def apply(p: AbPoly) -> AbPoly:
        out: Dict[str, int] = {}
        for w, c in p.terms().items():
            for u, cu in cached(w).terms().items():
                out[u] = out.get(u, 0) + c * cu
        return AbPoly(out)

    apply.__name__ = fn.__name__.lstrip("_")
    apply.__doc__ = fn.__doc__
    apply.on_word = cached
    return apply


def _is_power(w: str, x: str) -> bool:
    return w.count(x) == len(w)


@_linear
def kappa(w: str) -> AbPoly:
    """a^m -> (a-b)^m, every other word -> 0."""
    return a_minus_b_power(len(w)) if _is_power(w, "a") else AbPoly()


@_linear
def beta(w: str) -> AbPoly:
    """b^m -> (a-b)^m, every other word -> 0."""
    return a_minus_b_power(len(w)) if _is_power(w, "b") else AbPoly()


def _is_b_then_a(w: str) -> bool:
    stripped = w.lstrip("b")
    return _is_power(stripped, "a")


@_linear
def eta(w: str) -> AbPoly:
    """b^m a^k -> 2 (a-b)^(m+k), every other word -> 0."""
    return a_minus_b_power(len(w)) * 2 if _is_b_then_a(w) else AbPoly()


@_linear
def lambda_t(w: str) -> AbPoly:
    """b^m -> (a-b)^m, b^m a -> (a-b)^(m+1), every other word -> 0."""
    if _is_power(w, "b") or (w.endswith("a") and _is_power(w[:-1], "b")):
        return a_minus_b_power(len(w))
    return AbPoly()


def lambda_ub(p: AbPoly) -> AbPoly:
    """eta - 2 beta."""
    return eta(p) - beta(p) * 2


@_linear
def h_prime(w: str) -> AbPoly:
    """Drop the last letter; 1 -> 0."""
    return AbPoly.monomial(w[:-1]) if w else AbPoly()


@_linear
def r_map(w: str) -> AbPoly:
    """v·a -> v, v·b -> 0, 1 -> 0."""
    return AbPoly.monomial(w[:-1]) if w.endswith("a") else AbPoly()


# ---------------------------------------------------------------------------
# phi, phi_t, phi_ub

_C_TAIL = C_AB
_TWO_D = D_AB * 2


@_linear
def _phi_word(w: str) -> AbPoly:
    if w == "":
        return AbPoly.one()
    if w == "b":
        return B * 2
    if w.endswith("a") or w.endswith("bb"):
        return _phi_word.on_word(w[:-1]) * _C_TAIL
    # w ends with "ab"
    return _phi_word.on_word(w[:-2]) * _TWO_D


def phi(p: AbPoly) -> AbPoly:
    """Face-poset operator for central arrangements, via its recurrences.

    phi(1) = 1, phi(b) = 2b, phi(v a) = phi(v) c, phi(v bb) = phi(v b) c and
    phi(v ab) = phi(v) 2d.
    """
    _require_homogeneous(p)
    return _phi_word(p)


def _chain_operator(v: str, k: int, last: Callable[[AbPoly], AbPoly]) -> AbPoly:
    # sum over Delta^(k-1)(v) of kappa(v1) b eta(v2) b ... b eta(v_{k-1}) b last(v_k)
    out = AbPoly()
    for t, c in coproduct_k(AbPoly.monomial(v), k).terms().items():
        term = kappa(AbPoly.monomial(t[0]))
        if not term:
            continue
        for piece in t[1:-1]:
            term = term * B * eta(AbPoly.monomial(piece))
            if not term:
                break
        else:
            term = term * B * last(AbPoly.monomial(t[-1]))
            out = out + term * c
    return out


def _sum_over_k(p: AbPoly, last: Callable[[AbPoly], AbPoly]) -> AbPoly:
    out = AbPoly()
    for w, c in p.terms().items():
        total = kappa(AbPoly.monomial(w))
        for k in range(2, len(w) + 2):
            total = total + _chain_operator(w, k, last)
        out = out + total * c
    return out


def phi_by_coproduct(p: AbPoly) -> AbPoly:
    """phi as the sum over k of kappa ⊗ b ⊗ eta ⊗ ... ⊗ b ⊗ eta on Delta^(k-1)."""
    _require_homogeneous(p)
    return _sum_over_k(p, eta)


def phi_t_by_coproduct(p: AbPoly) -> AbPoly:
    """phi_t as the sum over k of its k-fold coproduct expressions."""
    _require_homogeneous(p)
    return _sum_over_k(p, lambda_t)


def phi_ub_by_coproduct(p: AbPoly) -> AbPoly:
    """phi_ub as the sum over k of its k-fold coproduct expressions."""
    _require_homogeneous(p)
    return _sum_over_k(p, lambda_ub)


@_linear
def _phi_t_word(w: str) -> AbPoly:
    out = kappa(AbPoly.monomial(w))
    for (u, v), c in coproduct(AbPoly.monomial(w)).terms().items():
        tail = lambda_t(AbPoly.monomial(v))
        if tail:
            out = out + _phi_word(AbPoly.monomial(u)) * B * tail * c
    return out


def phi_t(p: AbPoly) -> AbPoly:
    """Toric face-poset operator: kappa(v) + sum phi(v_(1)) b lambda_t(v_(2))."""
    _require_homogeneous(p)
    return _phi_t_word(p)


def phi_t_closed_form(p: AbPoly) -> AbPoly:
    """kappa(v) + omega(H'(v) b) / 2, valid on words of degree >= 2 starting with a."""
    _require_homogeneous(p)
    out = AbPoly()
    for w, c in p.terms().items():
        if not w.startswith("a") or len(w) < 2:
            raise ValueError(f"closed form needs an a-leading word of degree >= 2, got {w!r}")
        even = cd_expand(omega(AbPoly.monomial(w[:-1] + "b")))
        out = out + (kappa(AbPoly.monomial(w)) + halve(even)) * c
    return out


@_linear
def _phi_ub_word(w: str) -> AbPoly:
    if w == "":
        return AbPoly.one()
    if w == "b":
        return AbPoly()
    if w.endswith("a"):
        return _phi_word(AbPoly.monomial(w[:-1])) * A_MINUS_B
    if w.endswith("bb"):
        return _phi_ub_word.on_word(w[:-1]) * A_MINUS_B
    return AbPoly()  # ends with "ab"


def phi_ub(p: AbPoly) -> AbPoly:
    """Unbounded-complex operator via its three recurrences.

    phi_ub(v a) = phi(v)(a-b), phi_ub(v bb) = phi_ub(v b)(a-b), phi_ub(v ab) = 0,
    with phi_ub(1) = 1 and phi_ub(b) = 0.
    """
    _require_homogeneous(p)
    return _phi_ub_word(p)


def phi_ub_by_lemma(p: AbPoly) -> AbPoly:
    """phi(v) - 2 sum phi(v_(1)) b beta(v_(2))."""
    _require_homogeneous(p)
    out = phi(p)
    for (u, v), c in coproduct(p).terms().items():
        tail = beta(AbPoly.monomial(v))
        if tail:
            out = out - _phi_word(AbPoly.monomial(u)) * B * tail * (2 * c)
    return out


def butterfly_rhs(k: int) -> AbPoly:
    """(a-b)^(k-1) + 2 sum_{i+j=k-2} c^i b (a-b)^j; equals c^(k-1)."""
    out = a_minus_b_power(k - 1)
    for i in range(k - 1):
        j = k - 2 - i
        out = out + c_power(i) * B * a_minus_b_power(j) * 2
    return out


def split_count(n: int, k: int) -> int:
    """Number of Sweedler terms of Delta^(k-1) on a word of degree n."""
    return comb(n, k - 1)
