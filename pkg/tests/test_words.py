from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdgamma import polytopes
from cdgamma.errors import NotCDExpressibleError, NotSparseError
from cdgamma.flags import flag_f, flag_h
from cdgamma.words import (
    WordPolynomial,
    ab_to_cd,
    alpha_vector,
    cd_index,
    cd_monomials,
    dominates,
    expand_cd,
    is_sparse,
    leading_ab_word,
    monomial_to_set,
    psi_from_flag_h,
    reassemble,
    set_to_monomial,
    specialize_c1,
    suffix_decompose,
    truncate,
)
from oracles import cd_by_linear_solve, cd_words, expand_word

P = WordPolynomial.parse


def test_psi_examples(triangle, b2, square):
    assert psi_from_flag_h(flag_h(flag_f(triangle))) == P("aa + 2*ab + 2*ba + bb")
    assert psi_from_flag_h(flag_h(flag_f(b2))) == P("a + b")
    assert psi_from_flag_h(flag_h(flag_f(square))) == P("aa + 3*ab + 3*ba + bb")


def test_expand_examples():
    assert expand_cd(P("cc")) == P("aa + ab + ba + bb")
    assert expand_cd(P("d")) == P("ab + ba")
    assert expand_cd(P("cc + d")) == P("aa + 2*ab + 2*ba + bb")


def test_ab_to_cd_examples(cube3):
    assert ab_to_cd(P("aa + 2*ab + 2*ba + bb")) == P("cc + d")
    phi = ab_to_cd(psi_from_flag_h(flag_h(flag_f(cube3))))
    assert phi == P("ccc + 6*dc + 4*cd")
    assert expand_cd(phi) == psi_from_flag_h(flag_h(flag_f(cube3)))


def test_ab_to_cd_rejects_aa():
    with pytest.raises(NotCDExpressibleError) as err:
        ab_to_cd(P("aa"))
    assert err.value.residual


def test_non_eulerian_chain_rejected(chain2):
    with pytest.raises(NotCDExpressibleError):
        cd_index(chain2)


@pytest.mark.parametrize("n", range(0, 11))
def test_leading_word_is_injective(n):
    words = cd_monomials(n)
    assert len(words) == len(set(words)) == len(cd_words(n))
    leads = [leading_ab_word(w) for w in words]
    assert len(set(leads)) == len(leads)
    for w in words:
        expansion = expand_word(w)
        assert min(expansion) == leading_ab_word(w)
        assert expansion[leading_ab_word(w)] == 1


cd_polys = st.integers(0, 7).flatmap(lambda n: st.dictionaries(
    st.sampled_from(cd_monomials(n)), st.integers(-20, 20), max_size=8).map(
        lambda t: WordPolynomial("cd", t) if t else WordPolynomial("cd", {"c" * n: 1})))


@settings(max_examples=150, deadline=None)
@given(cd_polys)
def test_round_trip_random(phi):
    assert ab_to_cd(expand_cd(phi)) == phi


@settings(max_examples=150, deadline=None)
@given(cd_polys)
def test_suffix_reassembly(phi):
    n = phi.degree
    buckets = suffix_decompose(phi)
    assert reassemble(buckets, n) == phi
    for k, part in buckets.items():
        if k >= 2 and part:
            assert part.degree == k - 2
    assert truncate(phi, n) == phi


@pytest.mark.parametrize("p", [polytopes.simplex(4), polytopes.simplex(5),
                               polytopes.cube(4), polytopes.crosspolytope(4)],
                         ids=lambda p: p.name)
def test_cd_index_matches_linear_solve(p):
    fh = flag_h(flag_f(p))
    ref = cd_by_linear_solve(p.n, {s: v for s, v in fh.items()})
    assert cd_index(p) == WordPolynomial("cd", ref)


def test_specialize_examples():
    assert specialize_c1(P("ccc + 6*dc + 4*cd")) == [1, 10]
    assert specialize_c1(P("ccccc")) == [1, 0, 0]
    assert specialize_c1(P("cccc + 3*ccd + 5*cdc + 3*dcc + 4*dd")) == [1, 11, 4]


def test_simplex4_cd_index(simplex4):
    assert cd_index(simplex4) == P("cccc + 3*ccd + 5*cdc + 3*dcc + 4*dd")


def test_suffix_examples():
    b = suffix_decompose(P("ccc + 6*dc + 4*cd"))
    assert b[0] == P("ccc") and b[2] == 6 and b[3] == P("4*c")
    b = suffix_decompose(P("cccc + 2*ccd + 2*dcc + 4*dd"))
    assert b[0] == P("cccc") and b[2] == 2 and b[3] == 0 and b[4] == P("2*cc + 4*d")
    b = suffix_decompose(P("ccccc"))
    assert b[0] == P("ccccc") and all(not b[k] for k in range(2, 6))


def test_truncate():
    phi = P("cccc + 2*ccd + 2*dcc + 4*dd")
    assert truncate(phi, 2) == P("cccc + 2*dcc")
    assert truncate(phi, 1) == P("cccc")


def test_F_w_examples():
    assert monomial_to_set("c" * 6) == frozenset()
    for k in range(1, 4):
        assert monomial_to_set("d" * k) == frozenset(range(1, 2 * k, 2))
        assert monomial_to_set("c" + "d" * k) == frozenset(range(2, 2 * k + 1, 2))


@pytest.mark.parametrize("n", range(1, 11))
def test_F_w_bijection(n):
    sparse = [frozenset(c) for r in range(n) for c in combinations(range(1, n), r)
              if is_sparse(c)]
    images = {monomial_to_set(w) for w in cd_monomials(n)}
    assert images == set(sparse)
    for w in cd_monomials(n):
        assert set_to_monomial(monomial_to_set(w), n) == w


def test_set_to_monomial_rejects_consecutive():
    with pytest.raises(NotSparseError):
        set_to_monomial({1, 2}, 4)


def test_alpha_examples(cube3, simplex4):
    a = alpha_vector(cd_index(cube3))
    assert (a[()], a[{1}], a[{2}], a[{1, 2}]) == (1, 6, 4, 0)
    a = alpha_vector(cd_index(simplex4))
    assert (a[{1}], a[{2}], a[{3}], a[{1, 3}]) == (3, 5, 3, 4)
    assert a[{1, 2}] == a[{2, 3}] == 0
    a = alpha_vector(P("ccccc"))
    assert a[()] == 1 and all(v == 0 for s, v in a.items() if s)


def test_printing():
    assert str(P("4*cd + 6*dc + ccc")) == "1*ccc + 6*dc + 4*cd"
    assert str(WordPolynomial("cd")) == "0"
    assert str(WordPolynomial.one()) == "1*"
    assert P(str(P("cccc + 3*ccd + 5*cdc"))) == P("cccc + 3*ccd + 5*cdc")


def test_dominates_pads_missing_words():
    assert dominates(P("cc"), P("cc"))
    assert dominates(P("cc + d"), P("cc"))
    assert not dominates(P("cc"), P("cc + d"))


def test_multiplication_is_concatenation():
    a, b = P("c + 2*d"), P("cc + d")
    assert a * b == P("ccc + cd + 2*dcc + 2*dd")
    assert (P("cc + 2*d") ** 2) == P("cccc + 2*ccd + 2*dcc + 4*dd")
