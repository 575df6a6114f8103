import pytest
from hypothesis import given, strategies as st

from episturm.morphisms import (IDENTITY, Case, Elementary, La, NotDecodable, Ra, apply,
                                compose, decode_elementary, morphism_from_steps,
                                parse_morphism, reconstruct)
from episturm.words import WordError, count

import oracles

words3 = st.text(alphabet="abc", max_size=12)
letter = st.sampled_from("abc")
spin = st.sampled_from("LR")


def test_elementary_images():
    assert La("a")("bab") == "abaab"
    assert Ra("a")("bab") == "baaba"
    assert La("b")("") == ""
    assert str(La("c")) == "Lc"


def test_permutation():
    p = parse_morphism("P(ab->ba)")
    assert p("abc") == "bac"
    assert str(p) == "P(ab->ba)"
    with pytest.raises(WordError):
        Elementary("P", perm=("ab", "aa"))


def test_composition_is_outermost_first():
    m = parse_morphism("La Lb")
    assert m("b") == La("a")(La("b")("b"))
    assert m("a") == "aba"
    assert str(m) == "La Lb"
    assert apply("", "abc") == "abc" == IDENTITY("abc")


@pytest.mark.parametrize("bad", ["Lab", "La,Lb", "X", "P(a->)"])
def test_parse_rejects(bad):
    with pytest.raises(WordError):
        parse_morphism(bad)


@given(words3, letter, spin)
def test_matches_letterwise_oracle(w, a, s):
    assert Elementary(s, a)(w) == oracles.letter_image(s, a, w)


@given(words3, letter)
def test_length_identity(y, a):
    assert len(La(a)(y)) == 2 * len(y) - count(y, a)


@given(words3, letter)
def test_spin_duality(y, a):
    assert a + Ra(a)(y) == La(a)(y) + a


@given(words3, letter)
def test_palindrome_transport(y, a):
    assert (La(a)(y) + a == (La(a)(y) + a)[::-1]) == (y == y[::-1])


@given(words3, st.lists(st.tuples(letter, spin), max_size=3),
       st.lists(st.tuples(letter, spin), max_size=3))
def test_compose_law(w, f, g):
    mf, mg = morphism_from_steps(f), morphism_from_steps(g)
    assert compose(mf, mg)(w) == mf(mg(w))


def test_decode_examples():
    r = decode_elementary("baab", "a")
    assert (r.quotient, r.case, r.ambiguous_tail) == ("bab", Case.VIRTUAL, False)
    r = decode_elementary("aa", "a")
    assert (r.quotient, r.case, r.ambiguous_tail) == ("aa", Case.EXACT, True)
    r = decode_elementary("abaa", "a", trim=True)
    assert (r.quotient, r.case) == ("ba", Case.TRIMMED)
    r = decode_elementary("baba", "a", "R")
    assert (r.quotient, r.case) == ("bb", Case.EXACT)


def test_decode_failure_position():
    with pytest.raises(NotDecodable) as e:
        decode_elementary("abbc", "a")
    assert e.value.position == 2
    with pytest.raises(NotDecodable) as e:
        decode_elementary("cbba", "a", "R")
    assert e.value.position == 1


@given(words3.filter(bool), letter, spin, st.booleans())
def test_decode_round_trip(y, a, s, trim):
    w = Elementary(s, a)(y)
    r = decode_elementary(w, a, s, trim=trim)
    assert r.replay() == w
    assert reconstruct(r.quotient, a, s, r.case) == w
    if not r.case.trimmed:
        assert r.quotient == y


@given(words3.filter(bool), letter, spin, st.integers(0, 3), st.integers(0, 3))
def test_decode_factor_round_trip(y, a, s, i, j):
    w = Elementary(s, a)(y)
    v = w[i:len(w) - j] or w
    try:
        r = decode_elementary(v, a, s, trim=True)
    except NotDecodable:
        pytest.fail("factor of an image must decode")
    assert r.replay() == v
