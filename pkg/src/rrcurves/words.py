"""Exact word arithmetic in the rank-two free group F(A, B).

Letters are small integers chosen so that the fixed total order
A < A^-1 < B < B^-1 is plain integer order and inversion is ``x ^ 1``::

    A = 0, A^-1 = 1, B = 2, B^-1 = 3

A :class:`Word` is any finite letter sequence; nothing is reduced on
construction.  A :class:`CyclicWord` is always cyclically reduced and stored
at its lexicographically least rotation, so two cyclic words are conjugate
exactly when they compare equal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple

from .errors import EmptyWord, InvalidCounts, NotUnimodular

A, A_INV, B, B_INV = 0, 1, 2, 3
GENERATORS = "AB"


class Letter(enum.IntEnum):
    A = A
    A_INV = A_INV
    B = B
    B_INV = B_INV

    @property
    def generator(self) -> str:
        return GENERATORS[self >> 1]

    @property
    def sign(self) -> int:
        return -1 if self & 1 else 1

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)

    @classmethod
    def of(cls, generator: str, sign: int = 1) -> "Letter":
        return cls(2 * GENERATORS.index(generator) + (sign < 0))


def letter(generator: int, exponent_sign: int) -> int:
    """Letter code for generator index 0/1 raised to +1/-1."""
    return 2 * generator + (exponent_sign < 0)


class Word:
    """Immutable sequence of letters, not necessarily reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", tuple(int(x) for x in letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def power(cls, generator: str, exponent: int) -> "Word":
        g = GENERATORS.index(generator)
        return cls((letter(g, exponent),) * abs(exponent))

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[str, int]]) -> "Word":
        out: list[int] = []
        for gen, exp in syllables:
            out.extend(cls.power(gen, exp).letters)
        return cls(out)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(("Word", self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** (-k)
        return Word(self.letters * k)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        from .notation import format_word

        return format_word(self)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def syllables(self) -> list[tuple[str, int]]:
        """Maximal runs of one letter as (generator, signed exponent) pairs."""
        out: list[tuple[str, int]] = []
        prev = None
        for x in self.letters:
            if x == prev:
                gen, exp = out[-1]
                out[-1] = (gen, exp + (-1 if x & 1 else 1))
            else:
                out.append((GENERATORS[x >> 1], -1 if x & 1 else 1))
            prev = x
        return out

    @property
    def is_reduced(self) -> bool:
        ls = self.letters
        return all(ls[i] ^ 1 != ls[i + 1] for i in range(len(ls) - 1))


def _reduce(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return stack


def _cyclic_core(letters: list[int]) -> tuple[int, ...]:
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == letters[j] ^ 1:
        i += 1
        j -= 1
    return tuple(letters[i : j + 1])


def least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    # Booth's algorithm; O(n).
    s = t + t
    n = len(t)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k : k + n]


class CyclicWord:
    """Conjugacy class of a nontrivial element, in canonical form."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int]):
        t = tuple(letters)
        if not t:
            raise EmptyWord("a cyclic word must be nonempty")
        object.__setattr__(self, "letters", t)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    @classmethod
    def _trusted(cls, t: tuple[int, ...]) -> "CyclicWord":
        cw = object.__new__(cls)
        object.__setattr__(cw, "letters", t)
        return cw

    @property
    def word(self) -> Word:
        return Word(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if isinstance(other, CyclicWord):
            return self.letters == other.letters
        return NotImplemented

    def __lt__(self, other: "CyclicWord"):
        return (len(self), self.letters) < (len(other), other.letters)

    def __hash__(self):
        return hash(("CyclicWord", self.letters))

    def __str__(self):
        return str(self.word)

    def __repr__(self):
        return f"CyclicWord({str(self)!r})"


def free_reduce(w: Word) -> Word:
    return Word(_reduce(w.letters))


def cyclic_reduce(w: Word) -> CyclicWord:
    """Canonical cyclically reduced representative of the conjugacy class of ``w``."""
    core = _cyclic_core(_reduce(w.letters))
    if not core:
        raise EmptyWord(f"{w} is trivial in F(A,B)")
    return CyclicWord._trusted(least_rotation(core))


def is_canonical(t: tuple[int, ...]) -> bool:
    """True when ``t`` is cyclically reduced and equal to its least rotation."""
    if not t or t[0] == t[-1] ^ 1:
        return False
    if any(t[i] == t[i + 1] ^ 1 for i in range(len(t) - 1)):
        return False
    return least_rotation(t) == t


def invert(w: Word) -> Word:
    return Word(x ^ 1 for x in reversed(w.letters))


class AbVector(NamedTuple):
    a_exp: int
    b_exp: int

    def __add__(self, other):
        return AbVector(self.a_exp + other[0], self.b_exp + other[1])

    def __neg__(self):
        return AbVector(-self.a_exp, -self.b_exp)

    def __sub__(self, other):
        return self + (-AbVector(*other))

    def scale(self, k: int) -> "AbVector":
        return AbVector(k * self.a_exp, k * self.b_exp)

    def perp(self) -> "AbVector":
        return AbVector(-self.b_exp, self.a_exp)

    def dot(self, other) -> int:
        return self.a_exp * other[0] + self.b_exp * other[1]


def abelianize(w: Word) -> AbVector:
    counts = [0, 0, 0, 0]
    for x in w.letters:
        counts[x] += 1
    return AbVector(counts[A] - counts[A_INV], counts[B] - counts[B_INV])


def substitute(w: Word, image_A: Word, image_B: Word) -> Word:
    """Image of ``w`` under the endomorphism A -> image_A, B -> image_B, freely reduced."""
    images = (
        image_A.letters,
        invert(image_A).letters,
        image_B.letters,
        invert(image_B).letters,
    )
    out: list[int] = []
    for x in w.letters:
        out.extend(images[x])
    return Word(_reduce(out))


def primitive_root(cw: CyclicWord) -> tuple[CyclicWord, int]:
    """Shortest ``root`` and maximal ``k`` with ``cw`` equal to root^k as a cyclic sequence."""
    t = cw.letters
    n = len(t)
    for d in range(1, n + 1):
        if n % d == 0 and t[d:] + t[:d] == t:
            return CyclicWord._trusted(t[:d]), n // d
    raise AssertionError("unreachable")


def christoffel_pattern(x_count: int, y_count: int) -> list[bool]:
    """Lower Christoffel word with ``x_count`` x's and ``y_count`` y's; True marks y.

    Position i (1-based) is y exactly when floor(i*q/N) steps up, N = p + q.
    """
    n = x_count + y_count
    return [(i * y_count) // n > ((i - 1) * y_count) // n for i in range(1, n + 1)]


def balanced_product(X: Word, Y: Word, a: int, b: int) -> Word:
    """``a`` copies of X and ``b`` copies of Y interleaved in lower Christoffel order."""
    if a < 0 or b < 0 or a + b == 0:
        raise InvalidCounts(f"need a, b >= 0 with a + b >= 1, got ({a}, {b})")
    if a > 0 and b > 0 and gcd(a, b) != 1:
        raise InvalidCounts(f"block counts ({a}, {b}) are not coprime")
    out: list[int] = []
    for is_y in christoffel_pattern(a, b):
        out.extend(Y.letters if is_y else X.letters)
    return Word(_reduce(out))


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, r0, r1) -> "Mat2":
        return cls(int(r0[0]), int(r0[1]), int(r1[0]), int(r1[1]))

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )


def det2(U, V) -> int:
    return U[0] * V[1] - U[1] * V[0]


def perp_coefficient(U, V, W) -> int:
    """Coefficient y in W = xU + yV, given det(U, V) = +-1.

    Dotting both sides with U-perp kills the U term and leaves y * det(U, V).
    """
    d = det2(U, V)
    if d not in (1, -1):
        raise NotUnimodular(f"det({tuple(U)}, {tuple(V)}) = {d}")
    return d * AbVector(*U).perp().dot(W)


def unimodular_partner(U) -> AbVector:
    """Some V with det(U, V) = 1; U must be primitive in Z^2."""
    u0, u1 = U
    g, s, t = _ext_gcd(u0, u1)
    if g != 1:
        raise NotUnimodular(f"{tuple(U)} is not a primitive vector")
    # u0*s + u1*t = 1  =>  det((u0, u1), (-t, s)) = 1
    return AbVector(-t, s)


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def snf_diag(M: Mat2) -> tuple[int, int]:
    """Smith normal form diagonal (d1, d2) of a 2x2 integer matrix.

    d1 is the gcd of the entries and d1*d2 = |det M|; 0 stands for a free Z summand.
    """
    d1 = gcd(gcd(M.a, M.b), gcd(M.c, M.d))
    if d1 == 0:
        return 0, 0
    return d1, abs(M.det()) // d1
