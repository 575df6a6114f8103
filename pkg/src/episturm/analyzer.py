"""Decision procedures on finite words: local balance, Property P, balance.

Every check quantifies over factors ``u`` up to an explicit length bound and
reports that bound, so a verdict on a finite prefix is never read as a
statement about an infinite word beyond it. Failures are reported for the
smallest ``u`` in (length, lexicographic) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .generator import as_directive
from .words import FactorSet, WordError, alphabet_of, check_word, factors, is_palindrome

Pair = tuple[str, str]


@dataclass(frozen=True)
class FactorEntry:
    extensions: frozenset  # letter pairs (c, d) with c·u·d a factor
    witnesses: frozenset


@dataclass(frozen=True)
class LocalBalanceReport:
    word: str
    bound: int
    per_factor: dict = field(repr=False)
    passed: bool
    failing_factor: str | None = None
    strict: bool = False

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class PropertyPReport:
    word: str
    bound: int
    violation: tuple[str, str, str] | None = None  # (u, a·u·b, c·u·d)

    @property
    def passed(self) -> bool:
        return self.violation is None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def witnesses_of(exts: Iterable[Pair], alphabet: Iterable[str]) -> set[str]:
    """Letters ``a`` with every extension pair touching ``a``."""
    exts = list(exts)
    return {a for a in alphabet if all(c == a or d == a for c, d in exts)}


def local_balance_witnesses(fs: FactorSet, u: str) -> set[str]:
    return witnesses_of(fs.extensions(u), fs.alphabet)


def _default_bound(w: str, bound: int | None) -> int:
    top = len(w) - 2
    if bound is None:
        return top
    if bound > top:
        raise WordError(f"bound {bound} exceeds |w| - 2 = {top}")
    return bound


def _local_balance(w: str, bound: int | None, only_palindromes: bool,
                   strict: bool, alphabet) -> LocalBalanceReport:
    check_word(w)
    bound = _default_bound(w, bound)
    if bound < 0:
        return LocalBalanceReport(w, bound, {}, True, None, strict)
    fs = factors(w, bound + 2, alphabet=alphabet)
    per: dict[str, FactorEntry] = {}
    failing = None
    for n in range(bound + 1):
        exts = fs.extension_map(n)
        for u in sorted(fs.of_length(n)):
            if only_palindromes and not is_palindrome(u):
                continue
            e = exts.get(u, set())
            wit = witnesses_of(e, fs.alphabet)
            per[u] = FactorEntry(frozenset(e), frozenset(wit))
            bad = not wit or (strict and not e)
            if bad and failing is None:
                failing = u
    return LocalBalanceReport(w, bound, per, failing is None, failing, strict)


def finite_episturmian_check(w: str, bound: int | None = None, *, strict: bool = False,
                             alphabet=None) -> LocalBalanceReport:
    """Local balance over every factor ``u`` with ``|u| <= bound``.

    With the default bound ``|w| - 2`` a pass means ``w`` is a factor of
    some infinite episturmian word. ``strict`` also requires every such
    ``u`` to have at least one two-sided extension.
    """
    return _local_balance(w, bound, False, strict, alphabet)


def palindromic_local_balance_check(w: str, bound: int | None = None, *,
                                    strict: bool = False, alphabet=None) -> LocalBalanceReport:
    return _local_balance(w, bound, True, strict, alphabet)


def _disjoint_pair(exts: Iterable[Pair]) -> tuple[Pair, Pair] | None:
    for p, q in combinations(sorted(exts), 2):
        if not set(p) & set(q):
            return p, q
    return None


def property_p_check(w: str, bound: int | None = None) -> PropertyPReport:
    """Property P: for each ``u``, the factors in ``AuA`` pairwise share a letter."""
    check_word(w)
    bound = _default_bound(w, bound)
    if bound < 0:
        return PropertyPReport(w, bound)
    fs = factors(w, bound + 2)
    for n in range(bound + 1):
        exts = fs.extension_map(n)
        for u in sorted(exts):
            bad = _disjoint_pair(exts[u])
            if bad:
                (a, b), (c, d) = bad
                return PropertyPReport(w, bound, (u, a + u + b, c + u + d))
    return PropertyPReport(w, bound)


def classical_balance_check(w: str, a: str) -> tuple[bool, Pair | None]:
    """Balance for the letter ``a``: equal-length factors differ by at most one ``a``.

    The witness is, at the shortest unbalanced length, the lexicographically
    smallest factor with the most ``a`` and the smallest with the fewest.
    """
    check_word(w)
    prefix = [0]
    for x in w:
        prefix.append(prefix[-1] + (x == a))
    for n in range(1, len(w) + 1):
        counts = {}
        for i in range(len(w) - n + 1):
            counts.setdefault(w[i:i + n], prefix[i + n] - prefix[i])
        hi, lo = max(counts.values()), min(counts.values())
        if hi - lo > 1:
            u1 = min(u for u, c in counts.items() if c == hi)
            u2 = min(u for u, c in counts.items() if c == lo)
            return False, (u1, u2)
    return True, None


def coven_hedlund_witness(w: str, alphabet: str = "ab") -> tuple[str, Pair] | None:
    """Shortest (then smallest) palindrome ``t`` with ``a·t·a`` and ``b·t·b`` factors."""
    letters = tuple(alphabet)
    if len(letters) != 2 or len(set(letters)) != 2:
        raise WordError("Coven-Hedlund witness needs a binary alphabet")
    check_word(w, letters)
    a, b = letters
    present = {w[i:j] for i in range(len(w)) for j in range(i + 3, len(w) + 1)
               if w[i] == w[j - 1]}
    present.update(x + x for x in letters if x + x in w)
    for n in range(len(w) - 1):
        for t in sorted({f[1:-1] for f in present if len(f) == n + 2}):
            if is_palindrome(t) and a + t + a in present and b + t + b in present:
                return t, (a, b)
    return None


def ult(d) -> set[str]:
    return as_directive(d).ult()


def left_extension_letters(w: str, bound: int, alphabet=None) -> set[str]:
    """Letters ``x`` with ``x·p`` a factor of ``w`` for every prefix ``p``, ``|x·p| <= bound``."""
    check_word(w)
    if not 1 <= bound <= len(w):
        raise WordError(f"bound {bound} outside 1..{len(w)}")
    letters = alphabet_of(w) if alphabet is None else tuple(alphabet)
    fs = factors(w, bound)
    return {x for x in letters if all(x + w[:k] in fs for k in range(bound))}


def is_balanced(w: str, alphabet: Iterable[str] | None = None) -> bool:
    letters = alphabet_of(w) if alphabet is None else alphabet
    return all(classical_balance_check(w, a)[0] for a in letters)
