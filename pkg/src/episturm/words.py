"""Finite words over small lowercase alphabets and their factor sets.

Words are plain ``str`` values; the empty string is the empty word.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Iterator

LETTERS = string.ascii_lowercase


class WordError(ValueError):
    """Raised for malformed words, alphabets or length bounds."""


def check_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    letters = tuple(alphabet)
    if not letters:
        raise WordError("alphabet must be non-empty")
    if len(set(letters)) != len(letters):
        raise WordError(f"alphabet has repeated letters: {''.join(letters)!r}")
    bad = [x for x in letters if len(x) != 1 or x not in LETTERS]
    if bad:
        raise WordError(f"letters must be lowercase ascii, got {bad!r}")
    return letters


def check_word(w: str, alphabet: Iterable[str] | None = None) -> str:
    """Validate ``w`` (and optionally that it is read over ``alphabet``)."""
    if not isinstance(w, str):
        raise WordError(f"word must be a str, got {type(w).__name__}")
    allowed = set(LETTERS if alphabet is None else check_alphabet(alphabet))
    for i, x in enumerate(w):
        if x not in allowed:
            raise WordError(f"letter {x!r} at position {i} not in alphabet")
    return w


def alphabet_of(w: str) -> tuple[str, ...]:
    return tuple(sorted(set(w)))


def count(w: str, a: str) -> int:
    return w.count(a)


def mirror(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def longest_palindromic_suffix(w: str) -> str:
    """Longest suffix of ``w`` that is a palindrome (empty only for ``w = ε``).

    Linear time: the border of ``mirror(w) # w`` found by the KMP failure
    function is the longest suffix of ``w`` equal to a prefix of its mirror.
    """
    if not w:
        return ""
    s = w[::-1] + "#" + w
    fail = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    return w[len(w) - fail[-1]:]


def windows(w: str, n: int) -> Iterator[str]:
    for i in range(len(w) - n + 1):
        yield w[i:i + n]


@dataclass(frozen=True)
class FactorSet:
    """Distinct factors of ``source`` up to ``max_len``, stored per length.

    ``reliable_len`` is the largest length for which the list is taken as
    complete for the infinite word ``source`` is meant to approximate; for
    a plain finite word it equals ``max_len``.
    """

    source: str
    max_len: int
    reliable_len: int
    alphabet: tuple[str, ...]
    by_length: tuple[frozenset, ...] = field(repr=False)

    def __contains__(self, u: str) -> bool:
        n = len(u)
        return n <= self.max_len and u in self.by_length[n]

    def __iter__(self) -> Iterator[str]:
        for layer in self.by_length:
            yield from sorted(layer)

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.by_length)

    def of_length(self, n: int) -> frozenset:
        if not 0 <= n <= self.max_len:
            raise WordError(f"length {n} outside 0..{self.max_len}")
        return self.by_length[n]

    def extensions(self, u: str) -> set[tuple[str, str]]:
        """Letter pairs ``(c, d)`` with ``c·u·d`` in the set (AuA ∩ Fact)."""
        n = len(u) + 2
        if n > self.max_len:
            raise WordError(f"|u| + 2 = {n} exceeds max_len {self.max_len}")
        return {(f[0], f[-1]) for f in self.by_length[n] if f[1:-1] == u}

    def extension_map(self, n: int) -> dict[str, set[tuple[str, str]]]:
        """``extensions(u)`` for every ``u`` of length ``n`` that has one."""
        if n + 2 > self.max_len:
            raise WordError(f"|u| + 2 = {n + 2} exceeds max_len {self.max_len}")
        out: dict[str, set[tuple[str, str]]] = {}
        for f in self.by_length[n + 2]:
            out.setdefault(f[1:-1], set()).add((f[0], f[-1]))
        return out

    def left_letters(self, u: str) -> set[str]:
        return {f[0] for f in self.by_length[len(u) + 1] if f[1:] == u}

    def right_letters(self, u: str) -> set[str]:
        return {f[-1] for f in self.by_length[len(u) + 1] if f[:-1] == u}


def factors(w: str, max_len: int, *, prefix: bool = False,
            alphabet: Iterable[str] | None = None) -> FactorSet:
    """All distinct factors of ``w`` of length at most ``max_len``.

    With ``prefix=True`` the word is treated as a prefix of an infinite word
    and only lengths up to ``len(w) // 3`` are certified complete.
    """
    check_word(w, alphabet)
    if not 0 <= max_len <= len(w):
        raise WordError(f"max_len {max_len} outside 0..{len(w)}")
    layers = tuple(frozenset(windows(w, n)) for n in range(max_len + 1))
    reliable = min(max_len, len(w) // 3) if prefix else max_len
    alpha = check_alphabet(alphabet) if alphabet is not None else alphabet_of(w)
    return FactorSet(w, max_len, reliable, alpha, layers)


def special_factors(fs: FactorSet) -> tuple[set[str], set[str], set[str]]:
    """Left special, right special and bispecial factors of length < reliable_len."""
    if fs.max_len < 1:
        raise WordError("special factors need max_len >= 1")
    left, right = set(), set()
    for n in range(fs.reliable_len):
        before: dict[str, set[str]] = {}
        after: dict[str, set[str]] = {}
        for f in fs.by_length[n + 1]:
            before.setdefault(f[1:], set()).add(f[0])
            after.setdefault(f[:-1], set()).add(f[-1])
        left.update(u for u, xs in before.items() if len(xs) >= 2)
        right.update(u for u, xs in after.items() if len(xs) >= 2)
    return left, right, left & right


def is_mirror_closed(fs: FactorSet) -> bool:
    return all(u[::-1] in fs.by_length[n]
               for n in range(fs.reliable_len + 1) for u in fs.by_length[n])
