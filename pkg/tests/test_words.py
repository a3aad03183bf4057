import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import christoffel_bruteforce, reduced_words, snf_by_elimination, words
from rrcurves.errors import EmptyWord, InvalidCounts, NotUnimodular
from rrcurves.notation import parse_word
from rrcurves.words import (
    AbVector,
    CyclicWord,
    Letter,
    Mat2,
    Word,
    abelianize,
    balanced_product,
    cyclic_reduce,
    free_reduce,
    invert,
    least_rotation,
    perp_coefficient,
    primitive_root,
    snf_diag,
    substitute,
    unimodular_partner,
)

P = parse_word
X, Y = Word([0]), Word([2])  # stand-ins for the two blocks


def test_letter_values():
    assert [l.generator for l in Letter] == ["A", "A", "B", "B"]
    assert [l.sign for l in Letter] == [1, -1, 1, -1]
    assert Letter.B.inverse is Letter.B_INV
    assert Letter.of("A", -1) is Letter.A_INV
    assert len(Letter) == 4


@pytest.mark.parametrize(
    "text, expected",
    [("A a", ""), ("A B b A", "A^2"), ("A B^2 A^-1 B^2", "A B^2 A^-1 B^2")],
)
def test_free_reduce(text, expected):
    assert str(free_reduce(P(text))) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("B A b", "A"), ("B A", "A B"), ("A B a b", "A B A^-1 B^-1")],
)
def test_cyclic_reduce(text, expected):
    assert cyclic_reduce(P(text)) == CyclicWord(P(expected))


def test_cyclic_reduce_rejects_identity():
    with pytest.raises(EmptyWord):
        cyclic_reduce(P("A B b a"))
    with pytest.raises(EmptyWord):
        CyclicWord([])


@pytest.mark.parametrize("text, expected", [("A B", "B^-1 A^-1"), ("", ""), ("A^2 B^3", "B^-3 A^-2")])
def test_invert(text, expected):
    assert invert(P(text)) == P(expected)


def test_abelianize_examples():
    assert abelianize(P("A B^2 A^-1 B^2")) == (0, 4)
    p, q = 7, 3
    assert abelianize(Word.power("A", p) * Word.power("B", -q)) == (p, -q)


@pytest.mark.parametrize(
    "w, img_a, img_b, expected",
    [
        ("A B^2", "A B^-2", "B", "A"),
        ("A", "B", "A", "B"),
        ("A B^3 A B^2 A B^2", "A B^-2", "B", "A B A A"),
    ],
)
def test_substitute(w, img_a, img_b, expected):
    assert substitute(P(w), P(img_a), P(img_b)) == P(expected)


@pytest.mark.parametrize("s, rho", [(1, 0), (2, 3), (4, 1)])
def test_substitute_block_collapse(s, rho):
    # A B^(s+1) (A B^s)^rho  ->  A B A^rho, i.e. A^(rho+1) B as a cyclic block
    w = P("A") * Word.power("B", s + 1) * (P("A") * Word.power("B", s)) ** rho
    img = substitute(w, P("A") * Word.power("B", -s), P("B"))
    assert img == P("A B") * Word.power("A", rho) if rho else P("A B")
    assert cyclic_reduce(img) == cyclic_reduce(Word.power("A", rho + 1) * P("B"))


@pytest.mark.parametrize(
    "text, root, k",
    [("B^3", "B", 3), ("A B A B", "A B", 2), ("A B^2 A B^3", "A B^2 A B^3", 1)],
)
def test_primitive_root(text, root, k):
    r, kk = primitive_root(cyclic_reduce(P(text)))
    assert (r, kk) == (cyclic_reduce(P(root)), k)


def test_balanced_product_examples():
    assert balanced_product(X, Y, 1, 1) == P("A B")
    assert balanced_product(X, Y, 2, 1) == P("A A B")
    assert balanced_product(X, Y, 3, 2) == P("A A B A B")


def test_balanced_product_errors():
    with pytest.raises(InvalidCounts):
        balanced_product(X, Y, 0, 0)
    with pytest.raises(InvalidCounts):
        balanced_product(X, Y, 2, 4)


def test_balanced_product_degenerate_counts():
    assert balanced_product(X, Y, 3, 0) == P("A^3")
    assert balanced_product(X, Y, 0, 2) == P("B^2")


@pytest.mark.parametrize(
    "a, b", [(a, b) for a in range(1, 9) for b in range(1, 9) if a + b <= 12 and gcd(a, b) == 1]
)
def test_balanced_product_matches_bruteforce_christoffel(a, b):
    got = [0 if x == 0 else 1 for x in balanced_product(X, Y, a, b)]
    assert got == christoffel_bruteforce(a, b)


@pytest.mark.parametrize(
    "a, b", [(a, b) for a in range(13) for b in range(13) if 1 <= a + b <= 12 and gcd(a, b) == 1]
)
def test_balanced_product_is_balanced(a, b):
    seq = [x == 2 for x in balanced_product(X, Y, a, b)]
    n = len(seq)
    for m in range(1, n + 1):
        counts = {sum(seq[(i + j) % n] for j in range(m)) for i in range(n)}
        assert max(counts) - min(counts) <= 1


def test_perp_coefficient_examples():
    assert perp_coefficient((1, 0), (0, 1), (3, 5)) == 5
    assert perp_coefficient((2, 1), (1, 1), (5, 3)) == 1
    with pytest.raises(NotUnimodular):
        perp_coefficient((2, 0), (0, 1), (1, 1))


@pytest.mark.parametrize("p, nu", [(3, 1), (7, 3), (11, 4), (5, 2)])
def test_perp_coefficient_fiber_display(p, nu):
    U = AbVector(-p, nu)
    V = unimodular_partner(U)
    assert abs(perp_coefficient(U, V, (0, 1))) == p


def _solve_by_search(U, V, W, bound=60):
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x * U[0] + y * V[0] == W[0] and x * U[1] + y * V[1] == W[1]:
                return y
    return None


def test_perp_coefficient_against_search():
    rng = random.Random(7)
    checked = 0
    while checked < 150:
        U = (rng.randint(-6, 6), rng.randint(-6, 6))
        V = (rng.randint(-6, 6), rng.randint(-6, 6))
        if U[0] * V[1] - U[1] * V[0] not in (1, -1):
            continue
        W = (rng.randint(-9, 9), rng.randint(-9, 9))
        y_search = _solve_by_search(U, V, W)
        if y_search is None:
            continue
        y = perp_coefficient(U, V, W)
        assert y == y_search
        x = (W[0] - y * V[0], W[1] - y * V[1])
        # W - yV is an integer multiple of U
        assert x[0] * U[1] == x[1] * U[0]
        checked += 1


@pytest.mark.parametrize(
    "rows, expected",
    [(((4, 1), (0, 1)), (1, 4)), (((1, 0), (0, 1)), (1, 1)), (((2, 0), (0, 0)), (2, 0)), (((0, 0), (0, 0)), (0, 0))],
)
def test_snf_diag_examples(rows, expected):
    assert snf_diag(Mat2.from_rows(*rows)) == expected
    assert snf_by_elimination(rows) == expected


UNIMODULAR = [Mat2(1, 1, 0, 1), Mat2(1, -1, 0, 1), Mat2(1, 0, 1, 1), Mat2(0, 1, 1, 0), Mat2(-1, 0, 0, 1)]


@given(st.lists(st.integers(-12, 12), min_size=4, max_size=4), st.sampled_from(UNIMODULAR), st.sampled_from(UNIMODULAR))
def test_snf_properties(entries, left, right):
    M = Mat2(*entries)
    d1, d2 = snf_diag(M)
    assert (d1, d2) == snf_by_elimination(M.rows())
    if d1:
        assert d2 % d1 == 0
    assert d1 * d2 == abs(M.det())
    assert snf_diag(left @ M @ right) == (d1, d2)


# ---- properties


@given(words(12))
def test_free_reduce_properties(w):
    r = free_reduce(w)
    assert r.is_reduced
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    assert free_reduce(w * invert(w)) == Word()


@given(words(12), words(12))
def test_abelianize_additive(u, v):
    assert abelianize(u * v) == abelianize(u) + abelianize(v)
    assert abelianize(invert(u)) == -abelianize(u)


ENDOS = [
    (P("A B"), P("B")),
    (P("A b"), P("B")),
    (P("A"), P("B A")),
    (P("A"), P("B a")),
    (P("B"), P("A")),
    (P("a"), P("B")),
    (P("A"), P("b")),
]


@settings(max_examples=300)
@given(words(8), st.sampled_from(ENDOS), st.sampled_from(ENDOS))
def test_substitute_composition(w, sigma, tau):
    composed = (substitute(sigma[0], *tau), substitute(sigma[1], *tau))
    assert substitute(substitute(w, *sigma), *tau) == substitute(w, *composed)


def test_least_rotation_matches_bruteforce():
    for n in range(1, 8):
        for t in itertools.product(range(4), repeat=n):
            assert least_rotation(t) == min(t[i:] + t[:i] for i in range(n))


@given(reduced_words(16))
def test_cyclic_reduce_canonical_and_conjugation_invariant(w):
    try:
        cw = cyclic_reduce(w)
    except EmptyWord:
        return
    t = cw.letters
    assert t[0] != t[-1] ^ 1
    assert t == min(t[i:] + t[:i] for i in range(len(t)))
    for g in (P("A"), P("b"), P("A B^2")):
        assert cyclic_reduce(g * w * invert(g)) == cw


@given(reduced_words(14))
def test_primitive_root_properties(w):
    try:
        cw = cyclic_reduce(w)
    except EmptyWord:
        return
    root, k = primitive_root(cw)
    assert cyclic_reduce(root.word ** k) == cw
    r = root.letters
    assert all(r[d:] + r[:d] != r for d in range(1, len(r)))
    assert k * len(root) == len(cw)
