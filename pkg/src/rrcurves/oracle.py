"""Brute-force ground truth via Whitehead automorphisms of F(A, B).

Every automorphism of F(A, B) is a product of the moves in :data:`MOVES`.
By Whitehead's peak-reduction theorem a cyclic word that is not of minimal
length in its automorphism orbit admits a single move that strictly shortens
it, so greedy descent reaches the orbit minimum.  Rank-two primitives are
exactly the words whose orbit minimum has length one.

Move order (fixed; greedy descent takes the first move that shortens):

1. ``invert-A``, ``invert-B``, ``swap-AB``
2. for multiplier x in A, A^-1, B, B^-1 and y the other generator:
   ``right`` y -> y x, ``left`` y -> x^-1 y, ``conjugate`` y -> x^-1 y x
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from .notation import format_word
from .words import (
    CyclicWord,
    Word,
    abelianize,
    cyclic_reduce,
    invert,
    primitive_root,
    substitute,
)

_LETTER_NAMES = ("A", "A^-1", "B", "B^-1")


@dataclass(frozen=True)
class WhiteheadMove:
    name: str
    image_A: Word
    image_B: Word

    def __call__(self, w: Word) -> Word:
        return substitute(w, self.image_A, self.image_B)

    def apply_cyclic(self, cw: CyclicWord) -> CyclicWord:
        return cyclic_reduce(self(cw.word))

    def inverse(self) -> "WhiteheadMove":
        return _INVERSES[self.name]

    def to_dict(self):
        return {
            "name": self.name,
            "A": format_word(self.image_A),
            "B": format_word(self.image_B),
        }


def _build_moves() -> list[WhiteheadMove]:
    a, b = Word([0]), Word([2])
    moves = [
        WhiteheadMove("invert-A", invert(a), b),
        WhiteheadMove("invert-B", a, invert(b)),
        WhiteheadMove("swap-AB", b, a),
    ]
    for x in range(4):
        mult = Word([x])
        target = "B" if x < 2 else "A"
        y = b if x < 2 else a
        images = {
            "right": y * mult,
            "left": invert(mult) * y,
            "conjugate": invert(mult) * y * mult,
        }
        for pattern, img in images.items():
            name = f"{pattern}:{target}:{_LETTER_NAMES[x]}"
            if target == "B":
                moves.append(WhiteheadMove(name, a, img))
            else:
                moves.append(WhiteheadMove(name, img, b))
    return moves


MOVES: tuple[WhiteheadMove, ...] = tuple(_build_moves())
MOVES_BY_NAME = {m.name: m for m in MOVES}


def _compute_inverses():
    out = {}
    gens = (Word([0]), Word([2]))
    for m in MOVES:
        for cand in MOVES:
            if all(cand(m(g)) == g for g in gens):
                out[m.name] = cand
                break
    return out


_INVERSES = _compute_inverses()


@dataclass(frozen=True)
class OracleVerdict:
    minimal_word: CyclicWord
    move_trace: tuple[WhiteheadMove, ...]
    verdict: str  # "primitive" | "proper_power" | "neither"
    root: CyclicWord | None = None
    exponent: int | None = None

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "exponent": self.exponent,
            "root": None if self.root is None else format_word(self.root.word),
            "minimal_word": format_word(self.minimal_word.word),
            "minimal_length": len(self.minimal_word),
            "trace": [m.to_dict() for m in self.move_trace],
        }


def _as_cyclic(w) -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    return cyclic_reduce(w)


def minimize_length(cw: CyclicWord, search: str = "greedy") -> tuple[CyclicWord, tuple[WhiteheadMove, ...]]:
    """Shortest cyclic word in the automorphism orbit of ``cw`` plus the moves reaching it.

    ``search="bfs"`` explores every move sequence that never exceeds the
    starting length; it exists to cross-check the greedy path in tests.
    """
    if search == "bfs":
        return _minimize_bfs(cw)
    if search != "greedy":
        raise ValueError(f"unknown search {search!r}")
    trace = []
    cur = cw
    while len(cur) > 1:
        for m in MOVES:
            img = m.apply_cyclic(cur)
            if len(img) < len(cur):
                cur = img
                trace.append(m)
                break
        else:
            break
    return cur, tuple(trace)


def _minimize_bfs(cw: CyclicWord):
    limit = len(cw)
    parent: dict[CyclicWord, tuple[CyclicWord, WhiteheadMove] | None] = {cw: None}
    best = cw
    queue = deque([cw])
    while queue and len(best) > 1:
        cur = queue.popleft()
        for m in MOVES:
            img = m.apply_cyclic(cur)
            if len(img) > limit or img in parent:
                continue
            parent[img] = (cur, m)
            if len(img) < len(best):
                best = img
            queue.append(img)
    trace = []
    node = best
    while parent[node] is not None:
        prev, m = parent[node]
        trace.append(m)
        node = prev
    return best, tuple(reversed(trace))


def replay(w, trace) -> CyclicWord:
    cw = _as_cyclic(w)
    for m in trace:
        cw = m.apply_cyclic(cw)
    return cw


def is_primitive_oracle(w) -> bool:
    cw = _as_cyclic(w)
    minimal, _ = minimize_length(cw)
    return len(minimal) == 1


def is_proper_power_oracle(w) -> tuple[CyclicWord, int] | None:
    cw = _as_cyclic(w)
    root, k = primitive_root(cw)
    if k >= 2 and is_primitive_oracle(root):
        return root, k
    return None


def oracle_verdict(w) -> OracleVerdict:
    """Full oracle answer for a nontrivial word."""
    cw = _as_cyclic(w)
    minimal, trace = minimize_length(cw)
    if len(minimal) == 1:
        return OracleVerdict(minimal, trace, "primitive", cw, 1)
    pp = is_proper_power_oracle(cw)
    if pp is not None:
        return OracleVerdict(minimal, trace, "proper_power", pp[0], pp[1])
    return OracleVerdict(minimal, trace, "neither")


def abelian_filter(w: Word) -> bool:
    """Necessary condition for primitivity: exponent sums are coprime."""
    v = abelianize(w)
    return gcd(abs(v.a_exp), abs(v.b_exp)) == 1


__all__ = [
    "MOVES",
    "MOVES_BY_NAME",
    "OracleVerdict",
    "WhiteheadMove",
    "abelian_filter",
    "is_primitive_oracle",
    "is_proper_power_oracle",
    "minimize_length",
    "oracle_verdict",
    "replay",
]
