"""Iterated desubstitution of finite words.

Each step looks at the length-2 factors of the current word. If one letter
``α`` touches all of them the word is decoded through ``L_α`` (word starts
with ``α``) or ``R_α`` (otherwise); a ternary word whose 2-factors form the
cycle ``ab, bc, ca`` is a terminal core; anything else is blocked.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Union

from .analyzer import property_p_check, witnesses_of, _disjoint_pair
from .generator import SpinnedDirective
from .morphisms import L, R, Case, decode_elementary, reconstruct
from .words import WordError, alphabet_of, check_alphabet, check_word


@dataclass(frozen=True)
class Desub:
    letter: str
    spin: str
    alternatives: tuple[str, ...] = ()  # other letters that were also witnesses


@dataclass(frozen=True)
class Unary:
    letter: str


@dataclass(frozen=True)
class TernaryCore:
    letters: tuple[str, str, str]  # named so that ab, bc, ca are factors
    core: str = ""


@dataclass(frozen=True)
class Blocked:
    witness: tuple[str, str]


@dataclass(frozen=True)
class Exhausted:
    depth: int


Terminal = Union[Exhausted, Unary, TernaryCore, Blocked]


def two_factors(w: str) -> set[str]:
    return {w[i:i + 2] for i in range(len(w) - 1)}


def _cycle_naming(letters, facts: set[str]) -> tuple[str, str, str] | None:
    for a, b, c in permutations(sorted(letters)):
        if a == min(letters) and {a + b, b + c, c + a} <= facts:
            return a, b, c
    return None


def classify_step(w: str) -> Desub | TernaryCore | Unary | Blocked | Exhausted:
    """One step of the Property-P case analysis.

    Order: unary, desubstitution, ternary core, blocked. When several
    letters could be desubstituted, the first letter of ``w`` wins if it is
    one of them, else the smallest; the others are kept as alternatives.
    """
    check_word(w)
    if not w:
        return Exhausted(0)
    letters = alphabet_of(w)
    if len(letters) == 1:
        return Unary(w[0])
    facts = two_factors(w)
    exts = {(f[0], f[1]) for f in facts}
    bad = _disjoint_pair(exts)
    if bad:
        return Blocked(("".join(bad[0]), "".join(bad[1])))
    wit = witnesses_of(exts, letters)
    if wit:
        alpha = w[0] if w[0] in wit else min(wit)
        return Desub(alpha, L if w[0] == alpha else R,
                     tuple(sorted(wit - {alpha})))
    if len(letters) == 3 and not any(x + x in facts for x in letters):
        naming = _cycle_naming(letters, facts)
        if naming:
            return TernaryCore(naming, w)
    # pairwise-intersecting 2-factors with no common letter form a triangle,
    # so this is unreachable; kept as a defensive terminal
    return Blocked((min(facts), max(facts)))


@dataclass(frozen=True)
class TraceStep:
    word: str
    letter: str
    spin: str
    case: Case
    ambiguous_tail: bool
    alternatives: tuple[str, ...] = ()

    @property
    def ambiguous(self) -> bool:
        return bool(self.alternatives)


@dataclass(frozen=True)
class DecompositionTrace:
    word: str
    steps: tuple[TraceStep, ...]
    terminal: Terminal
    final_word: str

    @property
    def recovered(self) -> SpinnedDirective:
        return SpinnedDirective(tuple((s.letter, s.spin) for s in self.steps), ())

    def replay(self) -> str:
        """Rebuild the input from the final word, undoing each step's case."""
        w = self.final_word
        for s in reversed(self.steps):
            w = reconstruct(w, s.letter, s.spin, s.case)
        return w


class DecompositionDefect(RuntimeError):
    """A desubstitution step failed to shorten a non-unary word."""


def decompose(w: str, max_depth: int) -> DecompositionTrace:
    """Desubstitute repeatedly until a terminal case or ``max_depth`` steps.

    Lone trailing letters that could belong to a cut-off block are dropped
    (``Case.TRIMMED``) so that the quotient only contains certain factors.
    """
    check_word(w)
    if max_depth < 0:
        raise WordError("max_depth must be >= 0")
    cur = w
    steps: list[TraceStep] = []
    while True:
        c = classify_step(cur)
        if isinstance(c, Exhausted):
            return DecompositionTrace(w, tuple(steps), Exhausted(len(steps)), cur)
        if not isinstance(c, Desub):
            return DecompositionTrace(w, tuple(steps), c, cur)
        if len(steps) >= max_depth:
            return DecompositionTrace(w, tuple(steps), Exhausted(len(steps)), cur)
        r = decode_elementary(cur, c.letter, c.spin, trim=True)
        if len(r.quotient) >= len(cur):
            raise DecompositionDefect(f"step on {cur!r} did not shrink")
        steps.append(TraceStep(cur, c.letter, c.spin, r.case, r.ambiguous_tail,
                               c.alternatives))
        cur = r.quotient


class InconsistentDecomposition(ValueError):
    pass


def recover_directive(w: str, depth: int) -> SpinnedDirective:
    """First ``depth`` (letter, spin) steps read off ``w``.

    A unary terminal ``x^k`` is fixed by ``L_x``, so the remaining steps are
    filled with ``(x, L)``.
    """
    t = decompose(w, depth)
    if isinstance(t.terminal, (Blocked, TernaryCore)):
        raise InconsistentDecomposition(
            f"decomposition of {w!r} stopped at {t.terminal} after {len(t.steps)} steps")
    steps = [(s.letter, s.spin) for s in t.steps]
    if isinstance(t.terminal, Unary):
        steps += [(t.terminal.letter, L)] * (depth - len(steps))
    return SpinnedDirective(tuple(steps), ())


ENUM_BUDGET = 18


def enumerate_property_p(alphabet, length: int, require_abc_cycle: bool = False) -> list[str]:
    """All words of the given length with Property P, in lexicographic order.

    Property P passes to factors, so the search extends only words that
    still have it and checks just the factors ending at the new letter.
    """
    letters = check_alphabet(alphabet)
    if len(letters) > 3 or length > ENUM_BUDGET:
        raise WordError(f"enumeration budget: at most 3 letters and length {ENUM_BUDGET}")
    if length < 0:
        raise WordError("length must be >= 0")
    letters = tuple(sorted(letters))
    exts: dict[str, set[tuple[str, str]]] = {}
    out: list[str] = []

    def grow(w: str):
        if len(w) == length:
            if not require_abc_cycle or _has_abc_cycle(w, letters):
                out.append(w)
            return
        for x in letters:
            v = w + x
            added = []
            ok = True
            for i in range(len(v) - 2, -1, -1):
                u, pair = v[i + 1:-1], (v[i], x)
                seen = exts.setdefault(u, set())
                if pair in seen:
                    continue
                if any(not set(pair) & set(p) for p in seen):
                    ok = False
                    break
                seen.add(pair)
                added.append((u, pair))
            if ok:
                grow(v)
            for u, pair in added:
                exts[u].discard(pair)

    grow("")
    return out


def _has_abc_cycle(w: str, letters) -> bool:
    # literal ab, bc, ca for the first three letters of the alphabet
    if len(letters) != 3:
        return False
    a, b, c = letters
    return {a + b, b + c, c + a} <= two_factors(w)


def brute_force_property_p(alphabet, length: int, require_abc_cycle: bool = False) -> list[str]:
    """Reference enumeration by testing every word; used to check the search."""
    letters = tuple(sorted(check_alphabet(alphabet)))
    out = []
    for t in product(letters, repeat=length):
        w = "".join(t)
        if property_p_check(w).passed and (not require_abc_cycle or _has_abc_cycle(w, letters)):
            out.append(w)
    return out
