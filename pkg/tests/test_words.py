import pytest
from hypothesis import given, strategies as st

from episturm.words import (WordError, check_alphabet, check_word, factors,
                            is_mirror_closed, is_palindrome, longest_palindromic_suffix,
                            mirror, special_factors)

import oracles

FIB = "abaababaabaab"
words3 = st.text(alphabet="abc", max_size=14)


def test_factors_small():
    fs = factors("aba", 2)
    assert set(fs) == {"", "a", "b", "ab", "ba"}
    assert fs.reliable_len == 2


def test_factors_fibonacci_slices():
    assert factors(FIB, 2).of_length(2) == {"aa", "ab", "ba"}
    three = factors(FIB, 3).of_length(3)
    assert {"aab", "baa", "aba", "bab"} <= three
    assert "bbb" not in three
    assert three == {f for f in oracles.all_factors(FIB) if len(f) == 3}


def test_factors_bound_error():
    with pytest.raises(WordError):
        factors("ab", 3)


def test_prefix_mode_reliable_len():
    assert factors(FIB, 6, prefix=True).reliable_len == 4
    assert factors(FIB, 3, prefix=True).reliable_len == 3


@given(words3, st.integers(0, 14))
def test_factor_set_matches_brute_force(w, n):
    n = min(n, len(w))
    fs = factors(w, n)
    assert set(fs) == {f for f in oracles.all_factors(w) if len(f) <= n}


@given(words3)
def test_factor_set_closure_and_counting(w):
    fs = factors(w, len(w))
    for u in fs:
        if u:
            assert u[1:] in fs and u[:-1] in fs
    for n in range(len(w) + 1):
        assert len(fs.of_length(n)) <= len(w) - n + 1


def test_special_factors_fibonacci():
    _, _, bis = special_factors(factors(FIB, 3))
    assert {"", "a"} <= bis


def test_aba_bispecial_via_membership():
    fs = factors(FIB, 4)
    assert all(x in fs for x in ("aaba", "baba", "abaa", "abab"))
    assert "aba" in special_factors(fs)[2]


def test_unary_has_no_left_specials():
    left, right, bis = special_factors(factors("aaaa", 4))
    assert not [u for u in left if u]


def test_mirror_and_palindromes():
    assert mirror("abaa") == "aaba"
    assert is_palindrome("")
    assert longest_palindromic_suffix("abaabab") == "bab"
    assert longest_palindromic_suffix("") == ""


@given(words3)
def test_mirror_involution(w):
    assert mirror(mirror(w)) == w
    assert is_palindrome(w) == (w == mirror(w))


@given(words3)
def test_longest_palindromic_suffix_oracle(w):
    assert longest_palindromic_suffix(w) == oracles.longest_palindromic_suffix(w)


def test_mirror_closed():
    assert is_mirror_closed(factors(FIB, 3))
    assert not is_mirror_closed(factors("aab", 2))
    assert is_mirror_closed(factors("aaaa", 4))


def test_validation():
    with pytest.raises(WordError):
        check_word("aB")
    with pytest.raises(WordError):
        check_word("abd", "abc")
    with pytest.raises(WordError):
        check_alphabet("aa")
    with pytest.raises(WordError):
        check_alphabet("")
    assert check_word("") == ""
