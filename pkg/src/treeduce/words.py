"""Finite words over X_k = {0, ..., k-1} and LSD-first numerals.

Words are plain tuples of small non-negative integers. Numerals are words
read least significant digit first, so padding a numeral means appending
zeros on the right.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import LengthError, LetterOutOfRange, WidthOverflow

Word = Tuple[int, ...]

#: Largest value representable in the declared unsigned 64-bit width.
MAX_VALUE = 2**64 - 1


def check_width(value: int) -> int:
    if value < 0 or value > MAX_VALUE:
        raise WidthOverflow(f"{value} does not fit in 64 unsigned bits")
    return value


def validate(w: Iterable[int], k: int) -> Word:
    """Return ``w`` as a tuple, checking every letter lies in X_k."""
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")
    w = tuple(w)
    for x in w:
        if not 0 <= x < k:
            raise LetterOutOfRange(f"letter {x} not in alphabet of size {k}")
    return w


def to_digits_lsd(n: int, k: int) -> Word:
    """Minimal base-``k`` digit word of ``n``, least significant digit first.

    >>> to_digits_lsd(22, 2)
    (0, 1, 1, 0, 1)
    >>> to_digits_lsd(0, 3)
    ()
    """
    if n < 0:
        raise ValueError("negative integers have no numeral")
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")
    digits = []
    while n:
        n, r = divmod(n, k)
        digits.append(r)
    return tuple(digits)


def from_digits_lsd(w: Sequence[int], k: int) -> int:
    value = 0
    for x in reversed(validate(w, k)):
        value = value * k + x
        check_width(value)
    return value


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def pad_to(w: Sequence[int], n: int) -> Word:
    if len(w) > n:
        raise LengthError(f"word of length {len(w)} does not fit in length {n}")
    return tuple(w) + (0,) * (n - len(w))


def parse_word(text: str, k: int | None = None) -> Word:
    """Read the textual form: one digit character per letter, first letter leftmost."""
    text = text.strip()
    if not text.isdigit() and text != "":
        raise ValueError(f"not a word: {text!r}")
    w = tuple(int(ch) for ch in text)
    return validate(w, k) if k is not None else w


def format_word(w: Iterable[int]) -> str:
    return "".join(str(x) for x in w)
