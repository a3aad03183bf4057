"""Syntactic recognition of primitives and proper powers of primitives.

A cyclic word using both generators that is primitive, or a proper power of
a primitive, has (after possibly inverting A and/or B) one generator whose
syllable exponents are all 1 and another whose exponents lie in {e, e+1}
for some e > 0.  When that pattern holds, the automorphism sending the unit
letter X to X Y^-e (Y the other letter) shortens the word by e per syllable
while preserving the class, so iterating the check decides membership.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .notation import format_word
from .words import (
    GENERATORS,
    CyclicWord,
    Word,
    cyclic_reduce,
    letter,
    primitive_root,
    substitute,
)

# Tried in this order; the first witness wins.
INVERSIONS = ((False, False), (True, False), (False, True), (True, True))


@dataclass(frozen=True)
class SyllableForm:
    """Alternating exponents (n1, m1, ..., nl, ml) read from an A-syllable.

    ``single`` is set instead for a one-generator word X^k.
    """

    exponents: tuple[int, ...] = ()
    single: tuple[str, int] | None = None

    @property
    def l(self) -> int:
        return len(self.exponents) // 2

    @property
    def a_exponents(self) -> tuple[int, ...]:
        return self.exponents[0::2]

    @property
    def b_exponents(self) -> tuple[int, ...]:
        return self.exponents[1::2]

    def to_word(self) -> Word:
        if self.single is not None:
            return Word.power(*self.single)
        return Word.from_syllables(
            (GENERATORS[i % 2], e) for i, e in enumerate(self.exponents)
        )


@dataclass(frozen=True)
class CmzNormalization:
    invert_a: bool
    invert_b: bool
    unit: str  # generator whose exponents are all 1 after the inversions
    e: int

    @property
    def other(self) -> str:
        return "B" if self.unit == "A" else "A"

    def descent_images(self) -> tuple[Word, Word]:
        """Images of (A, B) under X^sx -> X^sx Y^(-sy*e), Y fixed."""
        ux = GENERATORS.index(self.unit)
        sx = -1 if (self.invert_a, self.invert_b)[ux] else 1
        sy = -1 if (self.invert_a, self.invert_b)[1 - ux] else 1
        x = Word([letter(ux, 1)])
        tail = Word.power(self.other, -sy * self.e)
        if sx == 1:
            img_x = x * tail
        else:
            # X^-1 -> X^-1 Y^(-sy e)  <=>  X -> Y^(sy e) X
            img_x = Word.power(self.other, sy * self.e) * x
        y = Word([letter(1 - ux, 1)])
        return (img_x, y) if ux == 0 else (y, img_x)


@dataclass(frozen=True)
class DescentStep:
    word: CyclicWord
    normalization: CmzNormalization
    image_A: Word
    image_B: Word
    result: CyclicWord

    def to_dict(self):
        n = self.normalization
        return {
            "word": format_word(self.word.word),
            "invert_a": n.invert_a,
            "invert_b": n.invert_b,
            "unit": n.unit,
            "e": n.e,
            "substitution": {"A": format_word(self.image_A), "B": format_word(self.image_B)},
            "result": format_word(self.result.word),
        }


@dataclass(frozen=True)
class CmzClass:
    verdict: str  # "primitive" | "proper_power" | "neither"
    exponent: int | None
    trace: tuple[DescentStep, ...]
    root: CyclicWord | None = None

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "exponent": self.exponent,
            "root": None if self.root is None else format_word(self.root.word),
            "trace": [s.to_dict() for s in self.trace],
        }


def cmz_syllables(cw: CyclicWord) -> SyllableForm:
    t = cw.letters
    gens = {x >> 1 for x in t}
    if len(gens) == 1:
        g = t[0] >> 1
        k = sum(-1 if x & 1 else 1 for x in t)
        return SyllableForm(single=(GENERATORS[g], k))
    n = len(t)
    start = next(i for i in range(n) if t[i] >> 1 == 0 and t[i - 1] >> 1 == 1)
    w = Word(t[start:] + t[:start])
    return SyllableForm(exponents=tuple(e for _, e in w.syllables()))


def _check(unit_exps, other_exps) -> int | None:
    if any(x != 1 for x in unit_exps):
        return None
    if any(x <= 0 for x in other_exps):
        return None
    e = min(other_exps)
    if all(x in (e, e + 1) for x in other_exps):
        return e
    return None


def cmz_condition(s: SyllableForm) -> CmzNormalization | None:
    """First inversion normalization under which the exponent pattern holds."""
    if s.single is not None or s.l < 1:
        raise DomainError("cmz_condition needs a word using both generators")
    ns, ms = s.a_exponents, s.b_exponents
    for inv_a, inv_b in INVERSIONS:
        na = [-x for x in ns] if inv_a else list(ns)
        mb = [-x for x in ms] if inv_b else list(ms)
        e = _check(na, mb)
        if e is not None:
            return CmzNormalization(inv_a, inv_b, "A", e)
        e = _check(mb, na)
        if e is not None:
            return CmzNormalization(inv_a, inv_b, "B", e)
    return None


def classify(w) -> CmzClass:
    """Primitive / proper power of a primitive / neither, by iterated descent."""
    cw = w if isinstance(w, CyclicWord) else cyclic_reduce(w)
    original = cw
    trace = []
    while True:
        s = cmz_syllables(cw)
        if s.single is not None:
            k = abs(s.single[1])
            if k == 1:
                return CmzClass("primitive", 1, tuple(trace), original)
            root, _ = primitive_root(original)
            return CmzClass("proper_power", k, tuple(trace), root)
        norm = cmz_condition(s)
        if norm is None:
            return CmzClass("neither", None, tuple(trace))
        img_a, img_b = norm.descent_images()
        nxt = cyclic_reduce(substitute(cw.word, img_a, img_b))
        if len(nxt) >= len(cw):
            raise AssertionError(f"descent did not shorten {cw}")
        trace.append(DescentStep(cw, norm, img_a, img_b, nxt))
        cw = nxt
