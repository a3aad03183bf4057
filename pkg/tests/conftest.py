import itertools
import sys
from functools import lru_cache
from math import gcd

import pytest
from hypothesis import strategies as st

from rrcurves.words import CyclicWord, Word, is_canonical

letters = st.integers(min_value=0, max_value=3)


def words(max_size=12, min_size=0):
    return st.lists(letters, min_size=min_size, max_size=max_size).map(Word)


def reduced_words(max_size=12, min_size=1):
    def _reduce(ls):
        out = []
        for x in ls:
            if out and out[-1] == x ^ 1:
                continue
            out.append(x)
        return Word(out)

    return st.lists(letters, min_size=min_size, max_size=max_size).map(_reduce).filter(len)


@lru_cache(maxsize=None)
def brute_canonical(max_len):
    """All canonical cyclic words by filtering every letter tuple; slow but obviously complete."""
    out = []
    for n in range(1, max_len + 1):
        for t in itertools.product(range(4), repeat=n):
            if is_canonical(t):
                out.append(CyclicWord(t))
    return out


def christoffel_bruteforce(a, b):
    """Lex-least balanced 0/1 sequence with a zeros and b ones (zero < one).

    Enumerates every arrangement, keeps the cyclically balanced ones and picks
    the least; independent of the floor-formula construction.
    """
    n = a + b
    best = None
    for ones in itertools.combinations(range(n), b):
        seq = [0] * n
        for i in ones:
            seq[i] = 1
        if _cyclically_balanced(seq) and (best is None or seq < best):
            best = seq
    return best


def _cyclically_balanced(seq):
    n = len(seq)
    doubled = seq + seq
    for m in range(1, n + 1):
        counts = {sum(doubled[i : i + m]) for i in range(n)}
        if max(counts) - min(counts) > 1:
            return False
    return True


def snf_by_elimination(rows):
    """Smith diagonal of a 2x2 integer matrix by explicit row/column operations."""
    m = [list(rows[0]), list(rows[1])]
    diag = []
    for k in range(2):
        while True:
            entries = [(abs(m[i][j]), i, j) for i in range(k, 2) for j in range(k, 2) if m[i][j]]
            if not entries:
                diag.extend([0] * (2 - k))
                return _fix_divisibility(diag)
            _, i, j = min(entries)
            m[k], m[i] = m[i], m[k]
            for r in m:
                r[k], r[j] = r[j], r[k]
            p = m[k][k]
            done = True
            for i2 in range(k + 1, 2):
                q = m[i2][k] // p
                m[i2] = [x - q * y for x, y in zip(m[i2], m[k])]
                if m[i2][k]:
                    done = False
            for j2 in range(k + 1, 2):
                q = m[k][j2] // p
                for r in m:
                    r[j2] -= q * r[k]
                if m[k][j2]:
                    done = False
            if done:
                diag.append(abs(p))
                break
    return _fix_divisibility(diag)


def _fix_divisibility(diag):
    d1, d2 = diag
    g = gcd(d1, d2)
    if g == 0:
        return 0, 0
    return g, d1 * d2 // g


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
