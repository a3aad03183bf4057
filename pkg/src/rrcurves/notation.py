"""Text notation for words.

Grammar::

    word     := sep* (factor (sep* factor)*)? sep*
    factor   := letter ('^' integer)?
    letter   := 'A' | 'B' | 'a' | 'b'        (lowercase is the inverse)
    integer  := ('+' | '-')? digit+          (zero is rejected)
    sep      := whitespace | '*'

``format_word`` prints the normal form: uppercase syllables in caret form
separated by single spaces, e.g. ``A B^2 A^-1 B^2``.
"""
from __future__ import annotations

from .errors import ParseError
from .words import GENERATORS, Word, letter

_LETTERS = {"A": (0, 1), "B": (1, 1), "a": (0, -1), "b": (1, -1)}
_SEPARATORS = " \t\r\n*"


def parse_word(text: str) -> Word:
    out: list[int] = []
    i, n = 0, len(text)

    def fail(msg, pos, expected):
        raise ParseError(msg, len(text[:pos].encode("utf-8")), expected)

    while i < n:
        ch = text[i]
        if ch in _SEPARATORS:
            i += 1
            continue
        if ch not in _LETTERS:
            fail(f"unexpected {ch!r}", i, {"A", "B", "a", "b"})
        gen, sign = _LETTERS[ch]
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            start = i
            if i < n and text[i] in "+-":
                i += 1
            digits_at = i
            while i < n and text[i].isdigit():
                i += 1
            if i == digits_at:
                fail("expected an integer exponent", i, {"digit", "+", "-"} if i == start else {"digit"})
            exp = int(text[start:i])
            if exp == 0:
                fail("zero exponent", start, {"nonzero integer"})
        exp *= sign
        out.extend([letter(gen, exp)] * abs(exp))
    return Word(out)


def format_word(w: Word) -> str:
    parts = []
    for gen, exp in w.syllables():
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
    return " ".join(parts)


def format_generators(images: tuple[Word, Word]) -> str:
    return ", ".join(f"{g} -> {format_word(img) or '1'}" for g, img in zip(GENERATORS, images))
