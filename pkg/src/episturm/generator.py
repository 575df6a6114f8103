"""Epistandard and episturmian prefixes from (spinned) directive words.

Two independent routes are provided: iterated palindromic closure
(:func:`epistandard_prefix`) and images of a seed under a composition of
elementary morphisms (:func:`episturmian_prefix_morphic`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import islice
from typing import Iterator, Sequence

from .morphisms import L, R, Elementary, morphism_from_steps
from .words import (FactorSet, WordError, check_word, factors, is_palindrome,
                    longest_palindromic_suffix)

Step = tuple[str, str]  # (letter, spin)

_STEP = re.compile(r"([LR])([a-z])|([a-z]+)")


@dataclass(frozen=True)
class SpinnedDirective:
    """Eventually periodic directive word ``preperiod · period^ω``.

    An empty period makes the directive finite, which is how recovered
    directive prefixes are represented.
    """

    preperiod: tuple[Step, ...] = ()
    period: tuple[Step, ...] = ()

    def __post_init__(self):
        for x, spin in self.preperiod + self.period:
            check_word(x)
            if len(x) != 1 or spin not in (L, R):
                raise WordError(f"bad directive step {(x, spin)!r}")

    @classmethod
    def parse(cls, text: str) -> "SpinnedDirective":
        """``"La Lb | La Lb"``; bare letters take spin L; no bar means purely periodic."""
        if "|" in text:
            pre, _, per = text.partition("|")
            return cls(_parse_steps(pre), _parse_steps(per))
        return cls((), _parse_steps(text))

    @classmethod
    def from_letters(cls, letters: str, periodic: bool = True, spins: str | None = None):
        steps = tuple(zip(letters, spins or L * len(letters)))
        return cls((), steps) if periodic else cls(steps, ())

    @property
    def finite(self) -> bool:
        return not self.period

    def __len__(self) -> int:
        if self.period:
            raise TypeError("infinite directive has no length")
        return len(self.preperiod)

    def __iter__(self) -> Iterator[Step]:
        yield from self.preperiod
        while self.period:
            yield from self.period

    def steps(self, n: int) -> tuple[Step, ...]:
        out = tuple(islice(self, n))
        if len(out) < n:
            raise WordError(f"directive has only {len(out)} steps, {n} requested")
        return out

    def letters(self, n: int) -> str:
        return "".join(x for x, _ in self.steps(n))

    def step(self, i: int) -> Step:
        """The ``i``-th step, counting from 1."""
        return self.steps(i)[-1]

    def shift(self, k: int) -> "SpinnedDirective":
        """Directive with the first ``k`` steps removed."""
        pre, per = self.preperiod, self.period
        if k <= len(pre):
            return SpinnedDirective(pre[k:], per)
        if not per:
            raise WordError("cannot shift past the end of a finite directive")
        k = (k - len(pre)) % len(per)
        return SpinnedDirective((), per[k:] + per[:k])

    def all_left(self) -> bool:
        return all(s == L for _, s in self.preperiod + self.period)

    def with_left_spins(self) -> "SpinnedDirective":
        return SpinnedDirective(tuple((x, L) for x, _ in self.preperiod),
                                tuple((x, L) for x, _ in self.period))

    def ult(self) -> set[str]:
        """Letters occurring infinitely often."""
        return {x for x, _ in self.period}

    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted({x for x, _ in self.preperiod + self.period}))

    def __str__(self) -> str:
        fmt = lambda steps: " ".join(s + x for x, s in steps)
        if not self.preperiod and self.period:
            return fmt(self.period)
        return f"{fmt(self.preperiod)} | {fmt(self.period)}".strip()


def _parse_steps(text: str) -> tuple[Step, ...]:
    steps: list[Step] = []
    for tok in text.split():
        m = _STEP.fullmatch(tok)
        if not m:
            raise WordError(f"bad directive token {tok!r}")
        if m.group(1):
            steps.append((m.group(2), m.group(1)))
        else:
            steps.extend((x, L) for x in m.group(3))
    return tuple(steps)


def as_directive(d) -> SpinnedDirective:
    if isinstance(d, SpinnedDirective):
        return d
    if isinstance(d, str):
        return SpinnedDirective.parse(d)
    raise TypeError(f"cannot read a directive from {type(d).__name__}")


def palindromic_closure(w: str) -> str:
    """Shortest palindrome having ``w`` as a prefix."""
    p = longest_palindromic_suffix(w)
    s = w[:len(w) - len(p)]
    return s + p + s[::-1]


def epistandard_prefix(d, n: int) -> str:
    """Palindrome obtained after ``n`` closure steps along the directive."""
    d = as_directive(d)
    if not d.all_left():
        raise WordError("epistandard generation needs an all-L directive")
    if n < 1:
        raise WordError("n must be >= 1")
    p = ""
    for x, _ in d.steps(n):
        p = palindromic_closure(p + x)
    return p


def epistandard_word(d, length: int) -> str:
    """Prefix of the epistandard word directed by the letters of ``d``.

    Spins are ignored; closure steps run until the prefix is long enough.
    """
    d = as_directive(d)
    if length < 0:
        raise WordError("length must be >= 0")
    p = ""
    steps = iter(d)
    while len(p) < length:
        try:
            x, _ = next(steps)
        except StopIteration:
            raise WordError(f"finite directive {d} too short for length {length}") from None
        p = palindromic_closure(p + x)
    return p[:length]


def episturmian_prefix_morphic(d, depth: int, seed: str | None = None) -> str:
    """Image of ``seed`` under the first ``depth`` spinned morphisms of ``d``.

    The seed defaults to the directive letter at position ``depth + 1``.
    """
    d = as_directive(d)
    if depth < 1:
        raise WordError("depth must be >= 1")
    if seed is None:
        seed = d.step(depth + 1)[0]
    check_word(seed)
    return morphism_from_steps(d.steps(depth))(seed)


def episturmian_word(d, length: int, depth: int | None = None) -> str:
    """Prefix of an episturmian word with the given spinned directive.

    The first ``depth`` spinned steps (default: one pass over preperiod and
    period) are applied to the epistandard word of the remaining directive;
    spins further down have no effect on a finite prefix built this way.
    """
    d = as_directive(d)
    if depth is None:
        depth = len(d.preperiod) + len(d.period)
    if d.finite:
        depth = min(depth, len(d))
        inner = "" if depth == len(d) else epistandard_word(d.shift(depth), length)
    else:
        inner = epistandard_word(d.shift(depth), length)
    f = morphism_from_steps(d.steps(depth))
    if not inner:
        raise WordError("finite directive leaves nothing to expand")
    # f is non-erasing, so |f(inner)| >= |inner| = length
    return f(inner)[:length]


def canonical_spins(d: SpinnedDirective, depth: int) -> SpinnedDirective:
    """Rewrite spins so the first ``depth`` steps follow the start-letter rule.

    At step ``i`` the rule reads spin L exactly when the word produced there
    starts with ``x_i``. An R step whose preimage already starts with
    ``x_i`` cannot be told apart from L and is switched to L.
    """
    steps = list(d.steps(depth))
    first = d.shift(depth).step(1)[0]
    for i in range(depth - 1, -1, -1):
        x, spin = steps[i]
        if spin == R and first == x:
            steps[i] = (x, L)
        elif spin == L:
            first = x
    rest = d.shift(depth)
    if d.finite:
        return SpinnedDirective(tuple(steps) + rest.preperiod, ())
    return SpinnedDirective(tuple(steps) + rest.preperiod, rest.period)


@dataclass(frozen=True)
class PalindromicPrefixTable:
    directive: SpinnedDirective
    entries: tuple[str, ...]

    def __getitem__(self, n: int) -> str:
        """``u_n``, counting from 1."""
        if n < 1:
            raise IndexError(n)
        return self.entries[n - 1]

    def __len__(self) -> int:
        return len(self.entries)


def u_entry(letters: str) -> str:
    """``L_{x1}(L_{x2}(... (L_{x(n-1)}(ε) x(n-1)) ...) x2) x1`` for ``letters = x1..x(n-1)``."""
    v = ""
    for x in reversed(letters):
        v = Elementary(L, x)(v) + x
    return v


def u_table(d, n: int) -> PalindromicPrefixTable:
    d = as_directive(d)
    if n < 1:
        raise WordError("n must be >= 1")
    xs = d.letters(n - 1)
    return PalindromicPrefixTable(d, tuple(u_entry(xs[:k]) for k in range(n)))


def sturmian_image(images: Sequence[str], inner: str) -> str:
    a_img, b_img = images
    return "".join(a_img if x == "a" else b_img for x in inner)


def six_images(name: str, n: int) -> tuple[str, str]:
    """Images of ``a`` and ``b`` under the ternary morphisms f, g1, g2."""
    if n < 1:
        raise WordError("n must be >= 1")
    ab = "ab" * n
    if name == "f_image":
        return ab + "c", ab + "ab" + "c"
    if name == "g1_image":
        return ab + "c", ab + "cb"
    if name == "g2_image":
        return ab + "c", ab + "ab" + "cb"
    raise WordError(f"unknown image morphism {name!r}")


CATALOG = ("fibonacci", "tribonacci", "abc_periodic", "p12_periodic",
           "f_image", "g1_image", "g2_image")

FIBONACCI = SpinnedDirective.parse("a b")
TRIBONACCI = SpinnedDirective.parse("a b c")
P12 = "abcabacbabcb"


def catalog(name: str, length: int, n: int = 1, inner="a b") -> str:
    """Prefix of length ``length`` of a named example word.

    ``f_image``, ``g1_image`` and ``g2_image`` apply the corresponding
    morphism (with parameter ``n``) to the epistandard word over ``{a, b}``
    directed by ``inner`` (Fibonacci by default).
    """
    if length <= 0:
        raise WordError("length must be positive")
    if name == "fibonacci":
        return epistandard_word(FIBONACCI, length)
    if name == "tribonacci":
        return epistandard_word(TRIBONACCI, length)
    if name == "abc_periodic":
        return ("abc" * (length // 3 + 1))[:length]
    if name == "p12_periodic":
        return (P12 * (length // 12 + 1))[:length]
    if name in ("f_image", "g1_image", "g2_image"):
        images = six_images(name, n)
        d = as_directive(inner)
        if not set(d.alphabet()) <= {"a", "b"}:
            raise WordError("inner directive must be over {a, b}")
        # each inner letter expands to at least len(images[0]) letters
        need = length // len(images[0]) + 1
        return sturmian_image(images, epistandard_word(d, need))[:length]
    raise WordError(f"unknown catalog word {name!r}; choose from {', '.join(CATALOG)}")


def complexity(d, n_max: int) -> list[int]:
    """Number of distinct factors of each length ``0..n_max`` of the episturmian
    word directed by ``d``.

    The left special factor of length ``n`` is the prefix of that length; it
    has the letters ``{x_i : i >= k}`` as left extensions, ``k`` being least
    with ``|u_k| >= n``.
    """
    d = as_directive(d)
    counts = [1]
    k, uk, steps = 1, "", iter(d)
    while len(counts) <= n_max:
        n = len(counts) - 1
        while len(uk) < n:
            # u_(k+1) is the closure of u_k x_k
            step = next(steps, None)
            if step is None:
                raise WordError("complexity needs an infinite directive")
            uk = palindromic_closure(uk + step[0])
            k += 1
        counts.append(counts[-1] + len(_tail_letters(d, k)) - 1)
    return counts


def _tail_letters(d: SpinnedDirective, k: int) -> set[str]:
    rest = d.shift(k - 1)
    return {x for x, _ in rest.preperiod + rest.period}


def certified_factors(d, length: int, max_len: int | None = None) -> FactorSet:
    """Factors of the generated prefix of length ``length``, with ``reliable_len``
    certified: at most ``length // 3`` and no larger than the last length whose
    factor count already matches :func:`complexity`.
    """
    d = as_directive(d)
    w = epistandard_word(d, length)
    fs = factors(w, length // 3 if max_len is None else max_len, prefix=True)
    target = complexity(d, fs.reliable_len)
    ok = 0
    while ok < fs.reliable_len and len(fs.by_length[ok + 1]) == target[ok + 1]:
        ok += 1
    return replace(fs, reliable_len=ok)


def is_table_consistent(table: PalindromicPrefixTable) -> bool:
    es = table.entries
    return (es[0] == "" and all(is_palindrome(u) for u in es)
            and all(es[i].startswith(es[i - 1]) for i in range(1, len(es))))
