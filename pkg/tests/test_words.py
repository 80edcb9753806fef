import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeduce.errors import LengthError, LetterOutOfRange, WidthOverflow
from treeduce.words import (
    MAX_VALUE,
    format_word,
    from_digits_lsd,
    pad_to,
    parse_word,
    reverse,
    to_digits_lsd,
)


@pytest.mark.parametrize(
    "n, k, expected",
    [(0, 3, ""), (5, 3, "21"), (22, 2, "01101")],
)
def test_to_digits_lsd(n, k, expected):
    assert format_word(to_digits_lsd(n, k)) == expected


@pytest.mark.parametrize(
    "w, k, expected",
    [("", 3, 0), ("111", 3, 13), ("0000000001", 3, 19683)],
)
def test_from_digits_lsd(w, k, expected):
    assert from_digits_lsd(parse_word(w), k) == expected


def test_from_digits_rejects_bad_letter():
    with pytest.raises(LetterOutOfRange):
        from_digits_lsd((0, 3), 3)


def test_overflow_is_reported():
    assert from_digits_lsd((1,) * 64, 2) == MAX_VALUE
    with pytest.raises(WidthOverflow):
        from_digits_lsd((0,) * 64 + (1,), 2)
    with pytest.raises(OverflowError):
        from_digits_lsd((2,) * 41, 3)


@pytest.mark.parametrize("w, expected", [("12002", "20021"), ("", ""), ("21", "12")])
def test_reverse(w, expected):
    assert format_word(reverse(parse_word(w))) == expected


@pytest.mark.parametrize("w, n, expected", [("1", 3, "100"), ("21", 2, "21"), ("01", 5, "01000")])
def test_pad_to(w, n, expected):
    assert format_word(pad_to(parse_word(w), n)) == expected


def test_pad_to_too_short():
    with pytest.raises(LengthError):
        pad_to((1, 2, 0), 2)


@given(st.integers(0, 2**40 - 1), st.sampled_from([2, 3]))
def test_round_trip(n, k):
    assert from_digits_lsd(to_digits_lsd(n, k), k) == n


@given(st.lists(st.integers(0, 2), max_size=20), st.integers(0, 10))
def test_padding_invariance(w, extra):
    assert from_digits_lsd(pad_to(w, len(w) + extra), 3) == from_digits_lsd(w, 3)


@given(st.lists(st.integers(0, 2), max_size=30))
def test_reverse_involution(w):
    assert reverse(reverse(w)) == tuple(w)


def test_minimal_numerals_have_no_trailing_zero():
    for n in range(1, 500):
        assert to_digits_lsd(n, 3)[-1] != 0
