import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from centerbench.braid import (
    BraidWord, braid_as_finmoncat, braid_theorem_checks, braiding_orders_agree, braiding_word,
    braids_equal, compose_braids, delta, evaluate_ribbon, framed, framed_compose,
    framed_equal, framed_inverse, framed_tensor, generator, hexagon_checks, identity_word,
    normal_form, permutation_of, random_relation_rewrite, ribbon_relations, tensor_braids,
    twist,
)
from centerbench.errors import FormatError
from centerbench.fincat import validate_category


# -- Burau oracle ---------------------------------------------------------


def burau(w: BraidWord, t: Fraction):
    """Unreduced Burau matrix of ``w`` at ``t`` (a representation of B_n)."""
    n = w.strands
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i, e in w.letters:
        k = i - 1
        if e > 0:
            block = [[1 - t, t], [Fraction(1), Fraction(0)]]
        else:
            block = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
        g = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for r in range(2):
            for c in range(2):
                g[k + r][k + c] = block[r][c]
        m = [[sum(m[r][x] * g[x][c] for x in range(n)) for c in range(n)] for r in range(n)]
    return m


def burau_equal(a, b):
    return all(burau(a, t) == burau(b, t) for t in (Fraction(2), Fraction(3)))


def test_burau_oracle_is_a_representation():
    br = BraidWord.parse("s1 s2 s1", 3)
    assert burau_equal(br, BraidWord.parse("s2 s1 s2", 3))
    assert not burau_equal(generator(3, 1), generator(3, 2))
    assert burau_equal(BraidWord.parse("s1 S1", 3), identity_word(3))


# -- strategies ---------------------------------------------------------------


@st.composite
def words(draw, min_n=1, max_n=6, max_len=14):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n < 2:
        return BraidWord(n)
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, max_n=5, max_len=10):
    a = draw(words(min_n=2, max_n=max_n, max_len=max_len))
    letters = draw(st.lists(st.tuples(st.integers(1, a.strands - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return a, BraidWord(a.strands, tuple(letters))


# -- normal forms ---------------------------------------------------------


def test_known_normal_forms():
    assert str(normal_form(BraidWord.parse("s1 s2 s1", 3))) == "D^1"
    assert str(normal_form(BraidWord.parse("s1 S1 s2 S2", 3))) == "D^0"
    assert str(normal_form(BraidWord.parse("S1 s2", 3))) == "D^-1 | [2 3 1] . [1 3 2]"


def test_parse_errors():
    with pytest.raises(FormatError):
        BraidWord.parse("s3", 3)
    with pytest.raises(FormatError):
        BraidWord.parse("x1", 3)


def test_delta_squared_is_central():
    n = 4
    full = BraidWord.parse("s1 s2 s3 s1 s2 s1 s1 s2 s3 s1 s2 s1", n)
    for i in range(1, n):
        g = generator(n, i)
        assert braids_equal(compose_braids(full, g), compose_braids(g, full))
    assert str(normal_form(full)) == "D^2"


@settings(max_examples=150, deadline=None)
@given(words())
def test_normal_form_round_trips(w):
    nf = normal_form(w)
    back = nf.to_word()
    assert normal_form(back) == nf
    assert burau_equal(w, back)
    assert permutation_of(w) == permutation_of(back)


@settings(max_examples=150, deadline=None)
@given(word_pairs())
def test_equality_agrees_with_burau(pair):
    a, b = pair
    # equal braids have equal Burau matrices; the converse is not claimed
    if not burau_equal(a, b):
        assert not braids_equal(a, b)


@settings(max_examples=100, deadline=None)
@given(words(min_n=2))
def test_inverse_cancels(w):
    assert braids_equal(compose_braids(w, w.inverse()), identity_word(w.strands))


@settings(max_examples=100, deadline=None)
@given(words(min_n=2, max_len=10), st.integers(0, 2**32 - 1))
def test_relation_rewrites_preserve_normal_form(w, seed):
    v = random_relation_rewrite(w, random.Random(seed))
    assert normal_form(v) == normal_form(w)
    assert burau_equal(v, w)


@settings(max_examples=100, deadline=None)
@given(words(max_n=4), words(max_n=4))
def test_permutation_is_a_homomorphism_for_tensor(a, b):
    pa, pb = permutation_of(a), permutation_of(b)
    assert permutation_of(tensor_braids(a, b)) == pa + tuple(a.strands + x for x in pb)


def test_delta_permutation_reverses():
    for n in range(1, 7):
        assert tuple(delta(n)) == tuple(reversed(range(n)))


def test_strand_mismatch():
    with pytest.raises(FormatError):
        braids_equal(identity_word(2), identity_word(3))


# -- braiding --------------------------------------------------------------


def test_braiding_permutation_swaps_blocks():
    assert permutation_of(braiding_word(2, 3)) == (3, 4, 0, 1, 2)
    for m in range(4):
        for n in range(4):
            assert braiding_orders_agree(m, n)


def test_hexagons():
    assert hexagon_checks(3) == []


# -- framed model ------------------------------------------------------------


def test_twists_add():
    assert framed_equal(framed_compose(twist(3, 2), twist(3, 2, 2)), twist(3, 2, 3))
    assert framed_equal(framed_compose(twist(3, 2), twist(3, 2, -1)), framed(identity_word(3)))


def test_framing_follows_strands():
    # a twist on strand 1 followed by a crossing ends up on position 2
    x = framed_compose(twist(2, 1), framed(generator(2, 1)))
    y = framed_compose(framed(generator(2, 1)), twist(2, 2))
    assert framed_equal(x, y)


def test_framed_inverse():
    x = framed_compose(twist(3, 1, 2), framed(BraidWord.parse("s1 S2", 3)))
    assert framed_equal(framed_compose(x, framed_inverse(x)), framed(identity_word(3)))


def test_framed_tensor_concatenates_framings():
    x = framed_tensor(twist(2, 1), twist(1, 1, 5))
    assert x.framings == (1, 0, 5)


@pytest.mark.parametrize("n", range(1, 6))
def test_ribbon_relations_hold(n):
    for label, lhs, rhs in ribbon_relations(n):
        assert framed_equal(evaluate_ribbon(n, lhs), evaluate_ribbon(n, rhs)), label


# -- truncated braid category ------------------------------------------------


def test_truncated_category_is_partial_but_consistent():
    c = braid_as_finmoncat(4, 1)
    assert c.partial
    assert c.provenance["source"] == "braid category"
    rep = validate_category(c)
    assert rep.ok and rep.skipped > 0


def test_theorem_checks_pass():
    checks = braid_theorem_checks(0)
    assert len(checks) == 3 and all(ch.passed for ch in checks)
