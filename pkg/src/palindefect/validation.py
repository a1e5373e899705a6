"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from numbers import Integral

from .words import Alphabet, ExplicitWord, WordSource, source_from_config


def check_word(word, alphabet: Alphabet | None = None) -> str:
    """Coerce ``word`` to a glyph string.

    Integer sequences are decoded through ``alphabet``; strings are checked
    against it when given.
    """
    if isinstance(word, str):
        return alphabet.check(word) if alphabet is not None else word
    if isinstance(word, Iterable):
        symbols = list(word)
        if all(isinstance(s, Integral) for s in symbols):
            if alphabet is None:
                raise ValueError("integer-coded words need an alphabet")
            if any(not 0 <= s < len(alphabet) for s in symbols):
                raise ValueError(f"letter index outside alphabet of size {len(alphabet)}")
            return alphabet.decode(symbols)
    raise TypeError(f"expected a word (str or integer sequence), got {type(word).__name__}")


def check_words(X, alphabet: Alphabet | None = None) -> list[str]:
    """A batch of words; a bare string is rejected to avoid iterating its letters."""
    if isinstance(X, str):
        raise TypeError("expected a collection of words, got a single string; wrap it in a list")
    return [check_word(w, alphabet) for w in X]


def check_source(source) -> WordSource:
    if isinstance(source, WordSource):
        return source
    if isinstance(source, str):
        return ExplicitWord(source)
    if isinstance(source, Mapping):
        return source_from_config(source)
    raise TypeError(f"expected a WordSource, word or config mapping, got {type(source).__name__}")


def check_count(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_fraction(value, name: str) -> float:
    if not 0 < value < 1:
        raise ValueError(f"{name} must lie strictly between 0 and 1, got {value}")
    return float(value)
