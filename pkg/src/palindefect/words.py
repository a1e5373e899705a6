"""Finite words, reversal primitives and generators for infinite words.

Words are plain ``str`` objects whose characters are single-glyph letters.
:class:`Alphabet` maps glyphs to integer indices for code that wants the
integer view; every algorithm in the package works for any glyph set.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

__all__ = [
    "Alphabet",
    "Morphism",
    "WordSource",
    "ExplicitWord",
    "PeriodicWord",
    "MorphismFixedPoint",
    "RecurrenceWord",
    "BUILTIN_NAMES",
    "reverse",
    "is_palindrome",
    "primitive_root",
    "is_primitive",
    "generate_prefix",
    "builtin_source",
    "source_from_config",
    "load_source_config",
]


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of single-character glyphs; letter ``i`` is ``glyphs[i]``."""

    glyphs: tuple[str, ...]

    def __post_init__(self):
        if any(len(g) != 1 for g in self.glyphs):
            raise ValueError("alphabet glyphs must be single characters")
        if len(set(self.glyphs)) != len(self.glyphs):
            raise ValueError("alphabet glyphs must be distinct")

    @classmethod
    def of(cls, word: str) -> "Alphabet":
        """Alphabet of the letters occurring in ``word``, sorted."""
        return cls(tuple(sorted(set(word))))

    def __len__(self) -> int:
        return len(self.glyphs)

    def __contains__(self, glyph: object) -> bool:
        return glyph in self.glyphs

    def index(self, glyph: str) -> int:
        return self.glyphs.index(glyph)

    def encode(self, word: str) -> tuple[int, ...]:
        lookup = {g: i for i, g in enumerate(self.glyphs)}
        try:
            return tuple(lookup[c] for c in word)
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} not in alphabet {self.glyphs}") from None

    def decode(self, symbols: Iterable[int]) -> str:
        return "".join(self.glyphs[s] for s in symbols)

    def check(self, word: str) -> str:
        for c in word:
            if c not in self.glyphs:
                raise ValueError(f"letter {c!r} not in alphabet {self.glyphs}")
        return word


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def primitive_root(w: str) -> str:
    """Shortest ``r`` with ``w == r * k``; the empty word is its own root."""
    n = len(w)
    if n == 0:
        return w
    # w is a proper power iff it occurs inside ww at a position in (0, n)
    p = (w + w).find(w, 1)
    return w[:p]


def is_primitive(w: str) -> bool:
    return len(w) > 0 and primitive_root(w) == w


@dataclass(frozen=True)
class Morphism:
    images: Mapping[str, str]

    def __post_init__(self):
        for letter, image in self.images.items():
            if len(letter) != 1:
                raise ValueError(f"morphism letter {letter!r} must be one character")
            if not image:
                raise ValueError(f"image of {letter!r} is empty")
            missing = set(image) - set(self.images)
            if missing:
                raise ValueError(f"image of {letter!r} uses letters outside the alphabet: {sorted(missing)}")

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(tuple(sorted(self.images)))

    def __call__(self, w: str) -> str:
        return "".join(self.images[c] for c in w)

    def is_prolongable(self, seed: str) -> bool:
        image = self.images.get(seed, "")
        return len(image) >= 2 and image[0] == seed


class WordSource(ABC):
    """Deterministic description of an infinite (or finite explicit) word."""

    kind: str = "abstract"

    @abstractmethod
    def prefix(self, length: int) -> str:
        """Return the first ``length`` letters."""

    def letter(self, i: int) -> str:
        if i < 0:
            raise IndexError("letter index must be non-negative")
        return self.prefix(i + 1)[i]

    @property
    def name(self) -> str:
        return self.kind

    def describe(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class ExplicitWord(WordSource):
    word: str
    kind: str = field(default="explicit", init=False)

    def prefix(self, length: int) -> str:
        _check_length(length)
        if length > len(self.word):
            raise ValueError(f"explicit word has length {len(self.word)}, cannot produce prefix of length {length}")
        return self.word[:length]

    @property
    def name(self) -> str:
        return self.word if len(self.word) <= 32 else f"{self.word[:29]}..."

    def describe(self) -> dict:
        return {"kind": self.kind, "word": self.word}


@dataclass(frozen=True)
class PeriodicWord(WordSource):
    """The word ``preperiod period period ...``."""

    period: str
    preperiod: str = ""
    kind: str = field(default="periodic", init=False)

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")

    def prefix(self, length: int) -> str:
        _check_length(length)
        head = self.preperiod[:length]
        rest = length - len(head)
        reps = -(-rest // len(self.period))
        return head + (self.period * reps)[:rest]

    @property
    def name(self) -> str:
        return f"{self.preperiod}({self.period})^w"

    def describe(self) -> dict:
        d = {"kind": self.kind, "period": self.period}
        if self.preperiod:
            d["preperiod"] = self.preperiod
        return d


@dataclass(frozen=True)
class MorphismFixedPoint(WordSource):
    morphism: Morphism
    seed: str
    kind: str = field(default="morphism", init=False)

    def __post_init__(self):
        if not self.morphism.is_prolongable(self.seed):
            raise ValueError(f"morphism is not prolongable on {self.seed!r}")

    def prefix(self, length: int) -> str:
        _check_length(length)
        w = self.seed
        while len(w) < length:
            w = self.morphism(w)
        return w[:length]

    def describe(self) -> dict:
        return {"kind": self.kind, "images": dict(self.morphism.images), "seed": self.seed}


@dataclass(frozen=True)
class RecurrenceWord(WordSource):
    """Limit of ``u_0 = seed``, ``u_{k+1} = rule(u_k, k)``.

    ``rule`` must return a word having its argument as a proper prefix.
    """

    seed: str
    rule: Callable[[str, int], str]
    label: str = "recurrence"
    kind: str = field(default="recurrence", init=False)

    def prefix(self, length: int) -> str:
        _check_length(length)
        u, k = self.seed, 0
        while len(u) < length:
            nxt = self.rule(u, k)
            if len(nxt) <= len(u) or not nxt.startswith(u):
                raise ValueError("recurrence rule must strictly extend its argument")
            u, k = nxt, k + 1
        return u[:length]

    def stage(self, k: int) -> str:
        """The finite word ``u_k``."""
        u = self.seed
        for j in range(k):
            u = self.rule(u, j)
        return u

    @property
    def name(self) -> str:
        return self.label

    def describe(self) -> dict:
        return {"kind": self.kind, "name": self.label}


def _check_length(length: int) -> None:
    if length < 0:
        raise ValueError(f"prefix length must be non-negative, got {length}")


def generate_prefix(source: WordSource | str, length: int) -> str:
    if isinstance(source, str):
        source = ExplicitWord(source)
    return source.prefix(length)


def _ternary_rule(u: str, k: int) -> str:
    return u + "b" * (k + 1) + "c" * (k + 1) + u


@dataclass(frozen=True)
class _Builtin:
    factory: Callable[[], WordSource]
    description: str


_BUILTINS: dict[str, _Builtin] = {
    "ab-omega": _Builtin(lambda: PeriodicWord("b", preperiod="a"), "a b b b ..., rich but not recurrent"),
    "rote": _Builtin(
        lambda: MorphismFixedPoint(Morphism({"0": "001", "1": "111"}), "0"),
        "fixed point of 0->001, 1->111",
    ),
    "ternary-oddity": _Builtin(
        lambda: RecurrenceWord("a", _ternary_rule, label="ternary-oddity"),
        "limit of u_0 = a, u_{k+1} = u_k b^{k+1} c^{k+1} u_k",
    ),
    "fibonacci": _Builtin(lambda: MorphismFixedPoint(Morphism({"a": "ab", "b": "a"}), "a"), "fixed point of a->ab, b->a"),
    "thue-morse": _Builtin(
        lambda: MorphismFixedPoint(Morphism({"a": "ab", "b": "ba"}), "a"), "fixed point of a->ab, b->ba"
    ),
}

BUILTIN_NAMES: tuple[str, ...] = tuple(_BUILTINS)


def builtin_source(name: str) -> WordSource:
    try:
        return _BUILTINS[name].factory()
    except KeyError:
        raise ValueError(f"unknown builtin word {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None


def source_from_config(config: Mapping) -> WordSource:
    """Build a source from a parsed word-source config document.

    Recognised kinds: ``builtin`` (``name``), ``explicit`` (``word``),
    ``periodic`` (``period``, optional ``preperiod``) and ``morphism``
    (``images``, ``seed``).  An optional ``alphabet`` list restricts the
    glyphs every word in the config may use.
    """
    kind = config.get("kind")
    alphabet = config.get("alphabet")
    alpha = Alphabet(tuple(alphabet)) if alphabet is not None else None

    def checked(w: str) -> str:
        if not isinstance(w, str):
            raise ValueError(f"expected a string word, got {type(w).__name__}")
        return alpha.check(w) if alpha is not None else w

    if kind == "builtin":
        return builtin_source(config.get("name", ""))
    if kind == "explicit":
        return ExplicitWord(checked(config.get("word", "")))
    if kind == "periodic":
        if "period" not in config:
            raise ValueError("periodic config requires 'period'")
        return PeriodicWord(checked(config["period"]), preperiod=checked(config.get("preperiod", "")))
    if kind == "morphism":
        images = config.get("images")
        seed = config.get("seed")
        if not isinstance(images, Mapping) or seed is None:
            raise ValueError("morphism config requires 'images' and 'seed'")
        for letter, image in images.items():
            checked(letter)
            checked(image)
        return MorphismFixedPoint(Morphism(dict(images)), checked(seed))
    raise ValueError(f"unknown source kind {kind!r}")


def load_source_config(path: str | Path) -> WordSource:
    with open(path) as fh:
        return source_from_config(json.load(fh))


def all_words(alphabet: Sequence[str], length: int) -> Iterable[str]:
    """Every word of the given length over ``alphabet``, in lexicographic order."""
    from itertools import product

    for letters in product(alphabet, repeat=length):
        yield "".join(letters)
