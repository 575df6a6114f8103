"""Elementary episturmian morphisms L_a, R_a and letter permutations.

A composition is stored outermost first: ``Composition((f, g))`` maps ``w``
to ``f(g(w))``. Literal syntax is ``"La"``, ``"Rb"`` and ``"P(ab->ba)"``,
whitespace separated, e.g. ``"La Lb La"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .words import LETTERS, WordError, check_word

L, R, PERM = "L", "R", "P"

_TOKEN = re.compile(r"([LR])([a-z])|P\(([a-z]*)->([a-z]*)\)")


class NotDecodable(ValueError):
    def __init__(self, word: str, position: int, reason: str):
        super().__init__(f"{word!r} not decodable at position {position}: {reason}")
        self.word = word
        self.position = position


@dataclass(frozen=True)
class Elementary:
    kind: str
    letter: str = ""
    # for PERM: (source letters, image letters), e.g. ("ab", "ba")
    perm: tuple[str, str] = ("", "")

    def __post_init__(self):
        if self.kind in (L, R):
            if len(self.letter) != 1 or self.letter not in LETTERS:
                raise WordError(f"bad letter {self.letter!r} for {self.kind}")
        elif self.kind == PERM:
            src, dst = self.perm
            if len(src) != len(dst) or len(set(src)) != len(src) or set(src) != set(dst):
                raise WordError(f"not a permutation: {src}->{dst}")
            check_word(src)
        else:
            raise WordError(f"unknown morphism kind {self.kind!r}")

    def image(self, x: str) -> str:
        a = self.letter
        if self.kind == L:
            return x if x == a else a + x
        if self.kind == R:
            return x if x == a else x + a
        src, dst = self.perm
        i = src.find(x)
        return x if i < 0 else dst[i]

    def __call__(self, w: str) -> str:
        if self.kind == PERM:
            return w.translate(str.maketrans(*self.perm))
        a = self.letter
        if self.kind == L:
            return "".join(x if x == a else a + x for x in w)
        return "".join(x if x == a else x + a for x in w)

    def __str__(self) -> str:
        if self.kind == PERM:
            return "P({}->{})".format(*self.perm)
        return self.kind + self.letter


def La(a: str) -> Elementary:
    return Elementary(L, a)


def Ra(a: str) -> Elementary:
    return Elementary(R, a)


@dataclass(frozen=True)
class Composition:
    steps: tuple[Elementary, ...] = ()

    def __call__(self, w: str) -> str:
        for m in reversed(self.steps):
            w = m(w)
        return w

    def image(self, x: str) -> str:
        return self(x)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " ".join(str(m) for m in self.steps)


IDENTITY = Composition()


def parse_morphism(text: str) -> Composition:
    """Parse ``"La Rb P(ab->ba)"`` (outermost first); empty text is the identity."""
    steps = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise WordError(f"bad morphism literal {tok!r}")
        if m.group(1):
            steps.append(Elementary(m.group(1), m.group(2)))
        else:
            steps.append(Elementary(PERM, perm=(m.group(3), m.group(4))))
    return Composition(tuple(steps))


def as_composition(m: Composition | Elementary | Iterable[Elementary] | str) -> Composition:
    if isinstance(m, Composition):
        return m
    if isinstance(m, Elementary):
        return Composition((m,))
    if isinstance(m, str):
        return parse_morphism(m)
    return Composition(tuple(m))


def apply(m, w: str) -> str:
    return as_composition(m)(check_word(w))


def compose(*parts) -> Composition:
    """``compose(f, g)`` is ``f ∘ g``: apply ``g`` first."""
    steps: list[Elementary] = []
    for p in parts:
        steps.extend(as_composition(p).steps)
    return Composition(tuple(steps))


class Case(Enum):
    """How a finite word sits inside the image of its decoded preimage.

    ``VIRTUAL`` means one letter ``a`` was added at the open end before
    parsing (at the front for L, at the back for R). ``TRIMMED`` means a lone
    ``a`` at the ambiguous end was left out of the preimage.
    For L: w = L(y), a·w = L(y), w = L(y)·a, a·w = L(y)·a.
    For R: w = R(y), w·a = R(y), w = a·R(y), w·a = a·R(y).
    """

    EXACT = "exact"
    VIRTUAL = "virtual"
    TRIMMED = "trimmed"
    VIRTUAL_TRIMMED = "virtual+trimmed"

    @property
    def virtual(self) -> bool:
        return self in (Case.VIRTUAL, Case.VIRTUAL_TRIMMED)

    @property
    def trimmed(self) -> bool:
        return self in (Case.TRIMMED, Case.VIRTUAL_TRIMMED)

    @classmethod
    def of(cls, virtual: bool, trimmed: bool) -> "Case":
        return [[cls.EXACT, cls.TRIMMED], [cls.VIRTUAL, cls.VIRTUAL_TRIMMED]][virtual][trimmed]


@dataclass(frozen=True)
class DecodeResult:
    quotient: str
    case: Case
    # a lone `a` sits at the open end (back for L, front for R) and might be
    # part of a block cut off by the window
    ambiguous_tail: bool
    letter: str = field(default="")
    spin: str = field(default=L)

    def replay(self) -> str:
        return reconstruct(self.quotient, self.letter, self.spin, self.case)


def reconstruct(y: str, a: str, spin: str, case: Case) -> str:
    """Inverse of :func:`decode_elementary`: rebuild ``w`` from its quotient."""
    img = Elementary(spin, a)(y)
    if spin == L:
        if case.trimmed:
            img = img + a
        if case.virtual:
            img = img[1:]
    else:
        if case.trimmed:
            img = a + img
        if case.virtual:
            img = img[:-1]
    return img


def _parse_left(w: str, a: str) -> tuple[list[str], bool]:
    # blocks "a x" (x != a) emit x, lone "a" emits a
    out = []
    i, n = 0, len(w)
    while i < n:
        if w[i] != a:
            raise NotDecodable(w, i, f"letter {w[i]!r} not preceded by {a!r}")
        if i + 1 < n and w[i + 1] != a:
            out.append(w[i + 1])
            i += 2
        else:
            out.append(a)
            i += 1
    return out, w.endswith(a)


def decode_elementary(w: str, a: str, spin: str = L, *, trim: bool = False) -> DecodeResult:
    """Desubstitute one elementary morphism ``L_a`` or ``R_a`` from ``w``.

    For L, a word starting with a letter other than ``a`` gets a virtual
    ``a`` in front. A trailing lone ``a`` is decoded as ``a`` and flagged
    ambiguous; with ``trim=True`` it is dropped from the quotient instead.
    R is handled as the mirror image of L.
    """
    check_word(w)
    if not w:
        raise WordError("cannot decode the empty word")
    if spin not in (L, R):
        raise WordError(f"spin must be L or R, got {spin!r}")
    work = w if spin == L else w[::-1]
    virtual = work[0] != a
    if virtual:
        work = a + work
    try:
        out, lone_end = _parse_left(work, a)
    except NotDecodable as e:
        pos = e.position - virtual
        if spin == R:
            pos = len(w) - 1 - pos
        raise NotDecodable(w, pos, "two adjacent letters differ from " + repr(a)) from None
    trimmed = trim and lone_end
    if trimmed:
        out.pop()
    y = "".join(out)
    if spin == R:
        y = y[::-1]
    return DecodeResult(y, Case.of(virtual, trimmed), lone_end and not trimmed, a, spin)


def morphism_from_steps(steps: Sequence[tuple[str, str]]) -> Composition:
    """Composition from ``(letter, spin)`` pairs, outermost first."""
    return Composition(tuple(Elementary(spin, x) for x, spin in steps))
