from episturm.generator import FIBONACCI, TRIBONACCI, SpinnedDirective, canonical_spins
from episturm.suites import (SUITES, bispecials_vs_table, random_mixed_directives,
                             roundtrip_mismatch, tail_letter_mismatches,
                             transport_discrepancies, verify)

import pytest


def test_suite_names():
    assert set(SUITES) == {"fibonacci-aua", "binary-coven-hedlund", "roundtrip-directives",
                           "property-p-catalog", "u-table-bispecials", "tail-letters",
                           "transport"}
    with pytest.raises(ValueError):
        verify("nope")


def test_random_directives_are_seeded_and_canonical():
    a, b = random_mixed_directives(20), random_mixed_directives(20)
    assert a == b
    assert all(canonical_spins(d, 6) == d for d in a)
    assert any(not d.all_left() for d in a)


def test_roundtrip_examples():
    for text in ("a b", "c a b b", "Ra Lb Lc", "Rb Rc La"):
        d = canonical_spins(SpinnedDirective.parse(text), 6)
        assert roundtrip_mismatch(d, 300, 5) is None


def test_bispecials_small():
    bis, table, fs = bispecials_vs_table(FIBONACCI, 100)
    assert bis == table
    assert {"", "a", "aba", "abaaba"} <= bis


def test_tail_letters_preperiodic():
    assert tail_letter_mismatches(SpinnedDirective.parse("Lc | La Lb")) == []
    assert tail_letter_mismatches(TRIBONACCI, 300) == []


def test_transport_small():
    assert transport_discrepancies(4) == []


def test_suite_result_dict():
    d = verify("u-table-bispecials").as_dict()
    assert d["verdict"] == "pass" and d["checked"] == 2
