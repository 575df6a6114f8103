"""Bundled verification suites behind ``episturm verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .analyzer import (classical_balance_check, coven_hedlund_witness,
                       finite_episturmian_check, property_p_check)
from .decomposer import InconsistentDecomposition, recover_directive
from .generator import (FIBONACCI, TRIBONACCI, SpinnedDirective, canonical_spins,
                        catalog, certified_factors, episturmian_prefix_morphic,
                        episturmian_word, epistandard_word, u_table)
from .morphisms import La
from .words import factors, special_factors


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    checked: int
    counterexample: object = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "verdict": "pass" if self.passed else "fail",
                "checked": self.checked, "counterexample": self.counterexample,
                "details": self.details}


# reference extension sets for short factors of the Fibonacci word
FIBONACCI_LISTING = {
    "": {"aa", "ab", "ba"},
    "a": {"aab", "baa"},
    "b": {"aba"},
    "aa": {"baab"},
}


def fibonacci_extensions(length: int = 60) -> dict[str, set[str]]:
    fs = factors(epistandard_word(FIBONACCI, length), 4)
    return {u: {c + u + d for c, d in fs.extensions(u)} for u in FIBONACCI_LISTING}


def fibonacci_aua(length: int = 60) -> SuiteResult:
    got = fibonacci_extensions(length)
    for u, want in FIBONACCI_LISTING.items():
        if got[u] != want:
            return SuiteResult("fibonacci-aua", False, len(got),
                               {"u": u, "expected": sorted(want), "computed": sorted(got[u])},
                               {"computed": {u: sorted(v) for u, v in got.items()}})
    return SuiteResult("fibonacci-aua", True, len(got))


def binary_coven_hedlund(max_len: int = 14) -> SuiteResult:
    checked = 0
    for n in range(max_len + 1):
        for t in product("ab", repeat=n):
            w = "".join(t)
            checked += 1
            unbalanced = not classical_balance_check(w, "a")[0]
            if (coven_hedlund_witness(w) is not None) != unbalanced:
                return SuiteResult("binary-coven-hedlund", False, checked, w)
    return SuiteResult("binary-coven-hedlund", True, checked)


def directive_family(alphabet: str = "abc", k: int = 6):
    for t in product(alphabet, repeat=k):
        yield SpinnedDirective.from_letters("".join(t))


def random_mixed_directives(count: int = 200, seed: int = 2007, alphabet: str = "abc",
                            k: int = 6) -> list[SpinnedDirective]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        letters = "".join(rng.choice(alphabet) for _ in range(k))
        spins = "".join(rng.choice("LR") for _ in range(k))
        out.append(canonical_spins(SpinnedDirective.from_letters(letters, spins=spins), k))
    return out


def roundtrip_mismatch(d: SpinnedDirective, length: int = 400, depth: int = 5,
                       unroll: int = 6):
    """``None`` when the first ``depth`` steps are recovered, else a description."""
    w = episturmian_word(d, length, depth=unroll) if not d.all_left() \
        else epistandard_word(d, length)
    try:
        got = recover_directive(w, depth).preperiod
    except InconsistentDecomposition as e:
        return {"directive": str(d), "error": str(e)}
    want = d.steps(depth)
    if got != want:
        return {"directive": str(d), "expected": " ".join(s + x for x, s in want),
                "recovered": " ".join(s + x for x, s in got)}
    return None


def roundtrip_directives(length: int = 400, depth: int = 5) -> SuiteResult:
    family = list(directive_family()) + random_mixed_directives()
    for i, d in enumerate(family):
        bad = roundtrip_mismatch(d, length, depth)
        if bad:
            return SuiteResult("roundtrip-directives", False, i + 1, bad)
        # route consistency: closure and morphic prefixes agree
        if d.all_left():
            p, m = epistandard_word(d, 100), episturmian_prefix_morphic(d, 6)
            if not (p.startswith(m) or m.startswith(p)):
                return SuiteResult("roundtrip-directives", False, i + 1,
                                   {"directive": str(d), "route": "closure vs morphic"})
    return SuiteResult("roundtrip-directives", True, len(family))


def property_p_catalog(length: int = 60) -> SuiteResult:
    checked = 0
    for name in ("abc_periodic", "p12_periodic"):
        w = catalog(name, length)
        checked += 1
        if not property_p_check(w).passed or finite_episturmian_check(w).passed:
            return SuiteResult("property-p-catalog", False, checked, name)
    for name in ("f_image", "g1_image", "g2_image"):
        for n in (1, 2):
            w = catalog(name, length, n=n)
            checked += 1
            r = property_p_check(w)
            if not r.passed:
                return SuiteResult("property-p-catalog", False, checked,
                                   {"word": name, "n": n, "violation": list(r.violation)})
    return SuiteResult("property-p-catalog", True, checked)


def bispecials_vs_table(d, length: int = 300):
    """(bispecial factors below the certified bound, matching u_table entries)."""
    fs = certified_factors(d, length)
    bis = special_factors(fs)[2]
    n = 1
    while len(u_table(d, n + 1)[n + 1]) < fs.reliable_len:
        n += 1
    entries = {u for u in u_table(d, n + 1).entries if len(u) < fs.reliable_len}
    return bis, entries, fs


def u_table_bispecials(length: int = 300) -> SuiteResult:
    for d in (FIBONACCI, TRIBONACCI):
        bis, entries, _ = bispecials_vs_table(d, length)
        if bis != entries:
            return SuiteResult("u-table-bispecials", False, 0,
                               {"directive": str(d), "bispecial": sorted(bis, key=len),
                                "table": sorted(entries, key=len)})
    return SuiteResult("u-table-bispecials", True, 2)


def tail_letter_mismatches(d, length: int = 300) -> list:
    """``(n, x)`` where membership of ``u_n·x`` disagrees with ``x in {x_i : i >= n}``."""
    fs = certified_factors(d, length)
    alphabet = d.alphabet()
    bad = []
    n = 1
    while True:
        u = u_table(d, n)[n]
        if len(u) + 1 > fs.reliable_len:
            return bad
        rest = d.shift(n - 1)
        tail = {x for x, _ in rest.preperiod + rest.period}
        for x in alphabet:
            if ((u + x) in fs) != (x in tail):
                bad.append((n, x))
        n += 1


def tail_letters(length: int = 300) -> SuiteResult:
    for d in (FIBONACCI, TRIBONACCI, SpinnedDirective.parse("Lc | La Lb")):
        bad = tail_letter_mismatches(d, length)
        if bad:
            return SuiteResult("tail-letters", False, 0, {"directive": str(d), "n_x": bad[0]})
    return SuiteResult("tail-letters", True, 3)


def transport_discrepancies(max_len: int = 7, alphabet: str = "abc") -> list:
    """``(y, alpha)`` where Property P of ``L_alpha(yyy)`` and of ``yyy`` disagree.

    Tripling stands in for recurrence; it is a test convention only.
    """
    bad = []
    for n in range(max_len + 1):
        for t in product(alphabet, repeat=n):
            y3 = "".join(t) * 3
            base = property_p_check(y3).passed
            for a in alphabet:
                if property_p_check(La(a)(y3)).passed != base:
                    bad.append(("".join(t), a))
    return bad


def transport(max_len: int = 7) -> SuiteResult:
    bad = transport_discrepancies(max_len)
    checked = 3 * sum(3 ** n for n in range(max_len + 1))
    return SuiteResult("transport", not bad, checked, bad[0] if bad else None)


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "fibonacci-aua": fibonacci_aua,
    "binary-coven-hedlund": binary_coven_hedlund,
    "roundtrip-directives": roundtrip_directives,
    "property-p-catalog": property_p_catalog,
    "u-table-bispecials": u_table_bispecials,
    "tail-letters": tail_letters,
    "transport": transport,
}


def verify(suite: str) -> SuiteResult:
    try:
        fn = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    return fn()
