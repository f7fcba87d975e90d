"""Arithmetic laws for straightening and brackets, mostly via hypothesis.

The laws are checked over Z.  Jacobi and antisymmetry holding on random
elements is strong evidence the one-step rewriting is self-consistent: any
bookkeeping slip in signs or tail handling shows up as a nonzero cycle.
"""

import pytest
from hypothesis import given, settings, strategies as st

from engel_lab.core import (
    LieElt,
    Z_WORD,
    ad_c,
    ad_z,
    bracket,
    format_elt,
    gen,
    is_normal,
    parse_word,
    straighten,
    zelt,
)
from engel_lab.core.elements import format_word
from engel_lab.core.words import block_of


# -- strategies -------------------------------------------------------------

def blocks(indices=st.integers(1, 6), max_size=3):
    return st.frozensets(indices, max_size=max_size).map(lambda s: block_of(s))


@st.composite
def raw_words(draw, max_blocks=4):
    """Left-normed words with disjoint blocks, not necessarily normal."""
    m = draw(st.integers(1, max_blocks))
    pool = list(range(1, 8))
    out = []
    for _ in range(m):
        take = draw(st.integers(0, min(3, len(pool))))
        idx = draw(st.permutations(pool))[:take]
        out.append(block_of(idx))
        pool = [i for i in pool if i not in idx]
    return tuple(out)


@st.composite
def elements(draw, max_terms=3, max_blocks=3):
    out = LieElt()
    for _ in range(draw(st.integers(1, max_terms))):
        w = draw(raw_words(max_blocks))
        c = draw(st.integers(-3, 3))
        out = out + LieElt({nw: c * cc for nw, cc in straighten(w).items()})
    return out


# -- straighten --------------------------------------------------------------

def test_straighten_fixed_points():
    for w in [Z_WORD, ((1, 2, 3),), ((2,), (1,), (3, 4)), ((), (1, 2), ())]:
        assert straighten(w) == {w: 1}


def test_straighten_annihilates_repeats():
    assert straighten(((1, 2), (2, 3))) == {}
    assert straighten(((1,), (2,), (1, 3))) == {}
    assert straighten(((), ())) == {}


def test_straighten_head_swap():
    # [u_1, u_23] has its heads out of order: swap with a sign
    assert straighten(((1,), (2, 3))) == {((2, 3), (1,)): -1}
    # z as a head is always moved to front
    assert straighten(((1, 2), ())) == {((), (1, 2)): -1}


def test_straighten_jacobi_step():
    # [[u_45, u_23], u_1]: tail generator u_1 below the second head ->
    # [[u_45,u_1],u_23] - [[u_23,u_1],u_45]
    got = straighten(((4, 5), (2, 3), (1,)))
    assert got == {((4, 5), (1,), (2, 3)): 1, ((2, 3), (1,), (4, 5)): -1}


def test_straighten_tail_sorts():
    got = straighten(((4, 5), (1, 2), (), (3,)))
    assert got == {((4, 5), (1, 2), (3,), ()): 1}


@given(raw_words())
def test_straighten_lands_on_normal_words(w):
    for nw, c in straighten(w).items():
        assert is_normal(nw)
        assert c != 0


@given(raw_words(max_blocks=5), st.data())
def test_straighten_tail_transposition_invariant(w, data):
    # transposing two tail generators of the input word never changes the
    # normal form: the head bracket sits in the derived subalgebra, where
    # everything commutes with it... swapping adjacent tail entries is a
    # relation of the algebra.
    if len(w) < 4:
        return
    i = data.draw(st.integers(2, len(w) - 2))
    swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
    assert straighten(w) == straighten(swapped)


# -- bracket laws ------------------------------------------------------------

@settings(max_examples=60)
@given(elements(), elements())
def test_antisymmetry(u, v):
    assert bracket(u, v) + bracket(v, u) == LieElt()


@settings(max_examples=60, deadline=None)
@given(elements(max_terms=2), elements(max_terms=2), elements(max_terms=2))
def test_jacobi(u, v, w):
    lhs = (
        bracket(bracket(u, v), w)
        + bracket(bracket(v, w), u)
        + bracket(bracket(w, u), v)
    )
    assert lhs == LieElt()


@settings(max_examples=60)
@given(elements(), elements(), st.integers(1, 7))
def test_ad_c_is_a_derivation(u, v, k):
    lhs = ad_c(bracket(u, v), k)
    rhs = bracket(ad_c(u, k), v) + bracket(u, ad_c(v, k))
    assert lhs == rhs


@settings(max_examples=60)
@given(elements(), st.integers(1, 7), st.integers(1, 7))
def test_ad_c_operators_commute(u, j, k):
    assert ad_c(ad_c(u, j), k) == ad_c(ad_c(u, k), j)


@given(elements())
def test_ad_z_matches_bracket_with_z(u):
    assert ad_z(u) == bracket(u, zelt())


@given(elements())
def test_bracket_with_self_vanishes(u):
    assert bracket(u, u) == LieElt()


def test_derived_subalgebra_is_abelian():
    u = LieElt(straighten(((2,), (1,))))
    v = LieElt(straighten(((4,), (3,))))
    assert bracket(u, v) == LieElt()


def test_ad_c_annihilates_when_index_present():
    assert ad_c(gen([1, 2]), 2) == LieElt()


def test_ad_z_of_z_vanishes():
    assert ad_z(zelt()) == LieElt()


def test_ad_c_leibniz_example():
    # [ [u_2, u_1], c_3 ] = [u_23, u_1] + [u_2, u_13]
    got = ad_c(LieElt({((2,), (1,)): 1}), 3)
    assert got == LieElt({((2, 3), (1,)): 1, ((2,), (1, 3)): 1})


# -- dump format -------------------------------------------------------------

def test_format_and_parse_word_round_trip():
    w = ((2, 5), (1, 3, 4), ())
    s = format_word(w)
    assert s == "[z|2,5][z|1,3,4][z|]"
    assert parse_word(s) == w


def test_parse_word_rejects_junk():
    for bad in ["", "z", "[z|1][y|2]", "[z|1] trailing", "[z|1,1]"]:
        with pytest.raises((ValueError, AssertionError)):
            parse_word(bad)


def test_format_elt_zero_and_ordering():
    assert format_elt(LieElt()) == "0"
    e = LieElt({((2,), (1,), ()): 3, ((1, 2, 3),): -1})
    lines = format_elt(e).splitlines()
    assert lines == ["-1 [z|1,2,3]", "3 [z|2][z|1][z|]"]
