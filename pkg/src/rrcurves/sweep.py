"""Exhaustive enumeration of cyclic words and the recognizer/oracle sweep."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .notation import format_word
from .oracle import oracle_verdict
from .recognizer import classify
from .words import CyclicWord, is_canonical


def enumerate_cyclic_words(max_len: int, min_len: int = 1) -> Iterator[CyclicWord]:
    """Every canonical cyclically reduced word with min_len <= length <= max_len, once.

    Depth-first over freely reduced prefixes, pruned to prenecklaces with the
    Fredricksen-Kessler-Maiorana period test.  Order: by length, then lex.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    for n in range(max(min_len, 1), max_len + 1):
        yield from _necklaces(n)


def _necklaces(n: int) -> Iterator[CyclicWord]:
    buf = [0] * n

    def rec(t: int, p: int):
        # buf[:t] is a reduced prenecklace with period p
        if t == n:
            if n % p == 0 and buf[0] != buf[-1] ^ 1:
                tup = tuple(buf)
                if is_canonical(tup):
                    yield CyclicWord._trusted(tup)
            return
        for x in range(4):
            if t and x == buf[t - 1] ^ 1:
                continue
            if t == 0:
                buf[0] = x
                yield from rec(1, 1)
                continue
            ref = buf[t - p]
            if x < ref:
                continue
            buf[t] = x
            yield from rec(t + 1, p if x == ref else t + 1)

    yield from rec(0, 1)


def compare(cw: CyclicWord):
    """(recognizer, oracle) verdict pairs; equal when they agree."""
    r = classify(cw)
    o = oracle_verdict(cw)
    return (r.verdict, r.exponent), (o.verdict, o.exponent)


def _check_length(n: int):
    checked = 0
    verdicts: Counter = Counter()
    bad = []
    for cw in _necklaces(n):
        checked += 1
        rv, ov = compare(cw)
        verdicts[ov[0]] += 1
        if rv != ov:
            bad.append(
                {
                    "word": format_word(cw.word),
                    "recognizer": {"verdict": rv[0], "exponent": rv[1]},
                    "oracle": {"verdict": ov[0], "exponent": ov[1]},
                }
            )
    return n, checked, dict(verdicts), bad


def sweep_equivalence(max_len: int, workers: int = 1) -> dict:
    """Recognizer vs oracle on every canonical word up to ``max_len``.

    Lengths are independent work units; the aggregate is merged by counting,
    so the result does not depend on scheduling.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    lengths = range(1, max_len + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_check_length, lengths))
    else:
        parts = [_check_length(n) for n in lengths]
    by_length = {}
    verdicts: Counter = Counter()
    mismatches = []
    for n, checked, counts, bad in sorted(parts):
        by_length[str(n)] = checked
        verdicts.update(counts)
        mismatches.extend(bad)
    return {
        "max_len": max_len,
        "mode": "equivalence",
        "checked": sum(by_length.values()),
        "by_length": by_length,
        "verdict_counts": {k: verdicts.get(k, 0) for k in ("primitive", "proper_power", "neither")},
        "mismatches": len(mismatches),
        "counterexamples": mismatches[:20],
    }
