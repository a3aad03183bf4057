import pytest
from hypothesis import given

from conftest import words
from rrcurves.errors import ParseError
from rrcurves.notation import format_word, parse_word
from rrcurves.words import Word


def test_parse_seifert_m_word():
    assert parse_word("A B^2 A^-1 B^2") == Word([0, 2, 2, 1, 2, 2])


@pytest.mark.parametrize("text", ["b^3", "B^-3", "b b b", "B^-1*B^-2"])
def test_inverse_spellings(text):
    assert parse_word(text) == Word([3, 3, 3])


@pytest.mark.parametrize("text", ["AB^2a", "A*B^+2*a", "  A  B B  a "])
def test_separators(text):
    assert format_word(parse_word(text)) == "A B^2 A^-1"


@pytest.mark.parametrize(
    "text, offset, expected",
    [("A^0", 2, {"nonzero integer"}), ("A C", 2, {"A", "B", "a", "b"}), ("B^", 2, {"digit", "+", "-"}), ("B^-x", 3, {"digit"})],
)
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as exc:
        parse_word(text)
    assert exc.value.offset == offset
    assert exc.value.expected == expected


def test_offset_counts_bytes():
    with pytest.raises(ParseError) as exc:
        parse_word("é?")
    assert exc.value.offset == 0
    with pytest.raises(ParseError) as exc:
        parse_word("A é")
    assert exc.value.offset == 2


def test_format_normal_form():
    assert format_word(parse_word("a a B")) == "A^-2 B"
    assert format_word(Word()) == ""


@given(words(8))
def test_round_trip(w):
    assert parse_word(format_word(w)) == w
