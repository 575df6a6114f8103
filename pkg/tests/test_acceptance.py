"""Acceptance criteria, one test each, with their time limits.

A line per criterion is printed in the terminal summary; run directly with
``python3 tests/test_acceptance.py`` for just these.
"""

import functools
import time
from itertools import product

import pytest

from episturm.analyzer import (classical_balance_check, coven_hedlund_witness,
                               finite_episturmian_check, palindromic_local_balance_check,
                               property_p_check)
from episturm.decomposer import Blocked, TernaryCore, decompose, enumerate_property_p, two_factors
from episturm.generator import (FIBONACCI, TRIBONACCI, catalog, episturmian_prefix_morphic,
                                epistandard_word)
from episturm.suites import (FIBONACCI_LISTING, bispecials_vs_table, directive_family,
                             fibonacci_extensions, random_mixed_directives,
                             roundtrip_mismatch, tail_letter_mismatches,
                             transport_discrepancies)

RESULTS: dict[int, tuple[str, str, float]] = {}
DIRECTIVES = list(directive_family())
INNER = ("a b", "a a b", "a b b", "b a", "b b a", "b a a")


def criterion(number: int, title: str, limit: float | None = None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - t0
                if limit is not None:
                    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            except BaseException:
                RESULTS[number] = (title, "FAIL", time.perf_counter() - t0)
                raise
            RESULTS[number] = (title, "PASS", elapsed)
        return run
    return wrap


@criterion(1, "Fibonacci extension sets", 1)
def test_c01_fibonacci_extension_sets():
    got = fibonacci_extensions(60)
    for u in ("", "b", "aa"):
        assert got[u] == FIBONACCI_LISTING[u]
    # listed as {aab, baa}; the word also contains bab
    assert got["a"] == FIBONACCI_LISTING["a"], f"computed {sorted(got['a'])}"


@criterion(2, "generated soundness", 60)
def test_c02_generated_soundness():
    bad = []
    for d in DIRECTIVES:
        w = epistandard_word(d, 100)
        full = finite_episturmian_check(w)
        pal = palindromic_local_balance_check(w)
        if not (full.passed and pal.passed):
            bad.append(str(d))
    assert bad == []


@criterion(3, "directive round-trip", 60)
def test_c03_roundtrip():
    family = DIRECTIVES + random_mixed_directives(200, seed=2007)
    bad = [m for d in family if (m := roundtrip_mismatch(d, 400, 5))]
    assert bad == []


@criterion(4, "Coven-Hedlund iff unbalanced", 60)
def test_c04_coven_hedlund():
    bad = []
    for n in range(15):
        for t in product("ab", repeat=n):
            w = "".join(t)
            if (coven_hedlund_witness(w) is not None) == classical_balance_check(w, "a")[0]:
                bad.append(w)
    assert bad == []


@criterion(5, "route consistency")
def test_c05_route_consistency():
    bad = []
    for d in DIRECTIVES:
        p, m = epistandard_word(d, 100), episturmian_prefix_morphic(d, 6)
        if not (p.startswith(m) or m.startswith(p)):
            bad.append(str(d))
    assert bad == []


@criterion(6, "bispecials and tail letters", 5)
def test_c06_bispecials_and_tails():
    for d in (FIBONACCI, TRIBONACCI):
        bis, table, fs = bispecials_vs_table(d, 300)
        assert bis == table
        assert fs.reliable_len >= 8
        assert tail_letter_mismatches(d, 300) == []


@criterion(7, "Property P separation")
def test_c07_separation():
    for name in ("abc_periodic", "p12_periodic"):
        w = catalog(name, 120)
        assert property_p_check(w).passed
        assert not finite_episturmian_check(w).passed
    got = {f for f in two_factors(catalog("p12_periodic", 120))}
    assert got == {x + y for x in "abc" for y in "abc" if x != y}


@criterion(8, "ternary images have Property P", 10)
def test_c08_images():
    bad = []
    for name in ("f_image", "g1_image", "g2_image"):
        for n in (1, 2):
            for inner in INNER:
                r = property_p_check(catalog(name, 60, n=n, inner=inner))
                if not r.passed:
                    bad.append((name, n, inner, r.violation))
    assert bad == []


@criterion(9, "transport under L_alpha", 120)
def test_c09_transport():
    assert transport_discrepancies(7, "abc") == []


@criterion(10, "Property P dichotomy", 120)
def test_c10_dichotomy():
    bad = []
    for n in range(13):
        for w in enumerate_property_p("abc", n):
            t = decompose(w, 64)
            if isinstance(t.terminal, Blocked) or t.replay() != w:
                bad.append(w)
            elif isinstance(t.terminal, TernaryCore):
                a, b, c = t.terminal.letters
                if not {a + b, b + c, c + a} <= two_factors(t.final_word):
                    bad.append(w)
    assert bad == []


def test_g2_images_of_words_without_aa():
    # the a-first inner words contain aa, where g2 breaks Property P
    for n in (1, 2):
        for inner in ("b a", "b b a", "b a a"):
            assert property_p_check(catalog("g2_image", 60, n=n, inner=inner)).passed
    assert not property_p_check(catalog("g2_image", 60, n=1, inner="a b")).passed


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
