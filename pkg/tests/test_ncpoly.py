"""ab- and cd-polynomials, coproducts and the face-poset operators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdindex.ncpoly import (
    A_MINUS_B,
    AbPoly,
    CdPoly,
    MixedDegreeError,
    NotCdExpressible,
    TensorSum,
    ab_to_cd,
    a_minus_b_power,
    beta,
    butterfly_rhs,
    c_power,
    cd_expand,
    coproduct,
    coproduct_k,
    coproduct_k_recursive,
    eta,
    h_prime,
    halve,
    kappa,
    lambda_t,
    lambda_ub,
    omega,
    phi,
    phi_by_coproduct,
    phi_t,
    phi_t_by_coproduct,
    phi_ub,
    phi_ub_by_coproduct,
    phi_ub_by_lemma,
    r_map,
    split_count,
    words,
)

ab_words = st.text(alphabet="ab", max_size=8)
cd_words = st.text(alphabet="cd", max_size=4)


@st.composite
def homogeneous_ab(draw, max_degree=7):
    n = draw(st.integers(0, max_degree))
    support = draw(st.lists(st.text(alphabet="ab", min_size=n, max_size=n), max_size=5))
    return AbPoly({w: draw(st.integers(-5, 5)) for w in support})


@st.composite
def any_cd(draw):
    return CdPoly({w: draw(st.integers(-9, 9)) for w in draw(st.lists(cd_words, max_size=5))})


def test_printing_uses_graded_colex_order():
    p = AbPoly({"bb": 6, "ab": 6, "ba": 2, "aa": 1})
    assert str(p) == "1*aa + 2*ba + 6*ab + 6*bb"
    assert str(AbPoly()) == "0"


@given(homogeneous_ab())
def test_parse_inverts_str(p):
    assert AbPoly.parse(str(p)) == p


@given(any_cd())
def test_cd_parse_inverts_str(q):
    assert CdPoly.parse(str(q)) == q


@pytest.mark.parametrize("text", ["a +", "2*", "ab ab", "ac", "3 ** a"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        AbPoly.parse(text)


def test_arithmetic_is_noncommutative():
    a, b = AbPoly.monomial("a"), AbPoly.monomial("b")
    assert a * b != b * a
    assert (a + b) ** 2 == AbPoly({"aa": 1, "ab": 1, "ba": 1, "bb": 1})
    assert AbPoly.parse("ab - ab") == AbPoly()


def test_star_reverses_words():
    assert AbPoly.parse("aab + 2*b").star() == AbPoly.parse("baa + 2*b")


def test_coproduct_of_aba():
    assert coproduct(AbPoly.monomial("aba")) == TensorSum(2, {("", "ba"): 1, ("a", "a"): 1, ("ab", ""): 1})


def test_threefold_coproduct_of_aba_has_three_terms():
    # Delta^2 of a degree-3 word deletes two of its three letters
    t = coproduct_k(AbPoly.monomial("aba"), 3)
    assert t == TensorSum(3, {("", "", "a"): 1, ("", "b", ""): 1, ("a", "", ""): 1})
    assert t.total_count() == split_count(3, 3) == 3


@settings(max_examples=60)
@given(ab_words, st.integers(1, 4))
def test_coassociativity(w, k):
    p = AbPoly.monomial(w)
    assert coproduct_k_recursive(p, k, "left") == coproduct_k_recursive(p, k, "right") == coproduct_k(p, k)


@given(ab_words, st.integers(1, 5))
def test_split_count(w, k):
    assert coproduct_k(AbPoly.monomial(w), k).total_count() == split_count(len(w), k)


@given(any_cd())
def test_cd_round_trip(q):
    homogeneous = {w: c for w, c in q.terms().items() if len(w) + w.count("d") == 4}
    q = CdPoly(homogeneous)
    assert ab_to_cd(cd_expand(q)) == q


def test_ab_to_cd_rejects_non_cd():
    with pytest.raises(NotCdExpressible):
        ab_to_cd(AbPoly.parse("ab"))


def test_mixed_degree_rejected():
    with pytest.raises(MixedDegreeError):
        omega(AbPoly.parse("a + ab"))


def test_omega_doubles_each_ab():
    assert omega(AbPoly.parse("abab + baba")) == CdPoly.parse("4*dd + 2*cdc")


def test_halve_insists_on_even():
    assert halve(AbPoly.parse("2*ab")) == AbPoly.parse("ab")
    with pytest.raises(ArithmeticError):
        halve(AbPoly.parse("2*ab + 3*ba"))


def test_word_maps():
    assert kappa(AbPoly.parse("aa + ab")) == a_minus_b_power(2)
    assert beta(AbPoly.parse("bb + ba")) == a_minus_b_power(2)
    assert eta(AbPoly.parse("ba + ab")) == a_minus_b_power(2) * 2
    assert lambda_t(AbPoly.parse("bba + bab + bbb")) == a_minus_b_power(3) * 2
    assert lambda_ub(AbPoly.parse("bb")) == AbPoly()
    assert h_prime(AbPoly.parse("ab + 1")) == AbPoly.parse("a")
    assert r_map(AbPoly.parse("ab + ba")) == AbPoly.parse("b")


def test_phi_small_values():
    assert phi(AbPoly.parse("b")) == AbPoly.parse("2*b")
    assert phi(AbPoly.parse("ab")) == cd_expand(CdPoly.parse("2*d"))
    assert phi(AbPoly.parse("aa")) == c_power(2)


@pytest.mark.parametrize("n", range(0, 7))
def test_operator_forms_agree_exhaustively(n):
    for w in words(n):
        p = AbPoly.monomial(w)
        assert phi(p) == phi_by_coproduct(p)
        assert phi_t(p) == phi_t_by_coproduct(p)
        assert phi_ub(p) == phi_ub_by_coproduct(p) == phi_ub_by_lemma(p)


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="ab", min_size=7, max_size=10))
def test_operator_forms_agree_on_long_words(w):
    p = AbPoly.monomial(w)
    assert phi(p) == phi_by_coproduct(p)
    assert phi_ub(p) == phi_ub_by_lemma(p)


def test_phi_matches_omega_exactly_on_a_leading_words():
    for n in range(1, 7):
        for w in words(n):
            same = phi(AbPoly.monomial(w)) == cd_expand(omega(AbPoly.monomial(w)))
            assert same == w.startswith("a")


@given(st.text(alphabet="ab", max_size=6))
def test_phi_ub_kills_words_ending_in_ab(v):
    assert not phi_ub(AbPoly.monomial(v + "ab"))


@pytest.mark.parametrize("k", range(1, 9))
def test_butterfly_sum(k):
    assert butterfly_rhs(k) == c_power(k - 1)


def test_kappa_is_multiplicative_on_a_powers():
    for m in range(5):
        assert kappa(AbPoly.monomial("a" * m)) == a_minus_b_power(m)
    assert A_MINUS_B ** 3 == a_minus_b_power(3)


def test_tensor_apply():
    t = coproduct(AbPoly.parse("ab + ba"))
    assert t.apply(lambda u, v: u * v, zero=AbPoly()) == AbPoly.parse("2*a + 2*b")
    assert sorted(words(2)) == ["aa", "ab", "ba", "bb"]
