"""Per-length factor registry: complexity, extensions, special factors,
return words, oddities and squares of a finite word.

Everything is exact with respect to the analysed word.  A finite prefix of an
infinite word can miss extensions its infinite continuation has; the only
factors whose extensions are structurally truncated are the length-``n``
prefix (left side) and suffix (right side) of the word, which the index
reports through :meth:`FactorIndex.boundary_factors`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .palindex import PalIndex
from .words import is_palindrome, primitive_root

__all__ = ["FactorIndex", "Oddity", "build_factor_index", "factor_complexity",
           "special_factors", "is_closed_under_reversal", "complete_return_words",
           "oddities", "squares", "canonical"]

Side = Literal["left", "right"]


def canonical(w: str) -> str:
    """Lexicographically smaller of ``w`` and its reversal."""
    r = w[::-1]
    return r if r < w else w


@dataclass(frozen=True, order=True)
class Oddity:
    """Unordered pair ``{v, reverse(v)}`` with ``v`` stored as the smaller one."""

    v: str
    v_reversed: str
    witness: str

    def as_record(self) -> dict:
        return {"v": self.v, "v_reversed": self.v_reversed, "witness": self.witness}


class FactorIndex:
    """Distinct factors of ``word`` for every length ``0..n_max + 1``.

    Per-length tables are computed on first use and cached, so building an
    index over a long word with a generous ``n_max`` costs nothing until a
    length is queried.
    """

    def __init__(self, word: str, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        if n_max + 1 > len(word):
            raise ValueError(f"n_max + 1 = {n_max + 1} exceeds word length {len(word)}")
        self.word = word
        self.n_max = n_max
        self._factors: dict[int, frozenset[str]] = {}
        self._ext: dict[tuple[int, str], dict[str, frozenset[str]]] = {}
        self._pal_index: PalIndex | None = None

    def __repr__(self) -> str:
        return f"FactorIndex(|w|={len(self.word)}, n_max={self.n_max})"

    def _check(self, n: int, cap: int) -> None:
        if not 0 <= n <= cap:
            raise ValueError(f"length {n} outside 0..{cap}")

    @property
    def pal_index(self) -> PalIndex:
        if self._pal_index is None:
            self._pal_index = PalIndex(self.word)
        return self._pal_index

    def factors(self, n: int) -> frozenset[str]:
        self._check(n, self.n_max + 1)
        got = self._factors.get(n)
        if got is None:
            w = self.word
            got = frozenset(w[i:i + n] for i in range(len(w) - n + 1))
            self._factors[n] = got
        return got

    def complexity(self, n: int) -> int:
        return len(self.factors(n))

    def _extensions(self, n: int, side: Side) -> dict[str, frozenset[str]]:
        self._check(n, self.n_max)
        key = (n, side)
        got = self._ext.get(key)
        if got is None:
            acc: dict[str, set[str]] = {f: set() for f in self.factors(n)}
            if side == "right":
                for g in self.factors(n + 1):
                    acc[g[:-1]].add(g[-1])
            else:
                for g in self.factors(n + 1):
                    acc[g[1:]].add(g[0])
            got = {f: frozenset(s) for f, s in acc.items()}
            self._ext[key] = got
        return got

    def extensions(self, f: str, side: Side) -> frozenset[str]:
        return self._extensions(len(f), side).get(f, frozenset())

    def right_extensions(self, f: str) -> frozenset[str]:
        return self.extensions(f, "right")

    def left_extensions(self, f: str) -> frozenset[str]:
        return self.extensions(f, "left")

    def special_factors(self, n: int, side: Side | Literal["any"]) -> frozenset[str]:
        if side == "any":
            return self.special_factors(n, "left") | self.special_factors(n, "right")
        ext = self._extensions(n, side)
        return frozenset(f for f, s in ext.items() if len(s) >= 2)

    def boundary_factors(self, n: int) -> dict[str, str]:
        """Length-``n`` factors whose extensions the word boundary truncates.

        Maps ``"left"`` to the prefix and ``"right"`` to the suffix of length
        ``n``, but only when that factor has no extension at all on its side
        (it occurs nowhere else), i.e. when its specialness is undecidable
        from the word alone.
        """
        self._check(n, self.n_max)
        out = {}
        head, tail = self.word[:n], self.word[len(self.word) - n:]
        if not self.left_extensions(head):
            out["left"] = head
        if not self.right_extensions(tail):
            out["right"] = tail
        return out

    def is_closed_under_reversal(self, n: int) -> bool:
        fs = self.factors(n)
        return all(f[::-1] in fs for f in fs)

    def occurrences(self, f: str) -> list[int]:
        """Sorted start positions of ``f``, overlaps included."""
        w, out = self.word, []
        i = w.find(f)
        while i != -1:
            out.append(i)
            i = w.find(f, i + 1)
        return out

    def occurrence_count(self, f: str) -> int:
        return len(self.occurrences(f)) if f else len(self.word) + 1

    def complete_return_words(self, f: str) -> frozenset[str]:
        """Words spanning two consecutive occurrences of ``f``.

        Empty when ``f`` occurs fewer than twice; use :meth:`occurrence_count`
        to tell the cases apart.
        """
        if not f:
            raise ValueError("complete return words of the empty word are undefined")
        occ = self.occurrences(f)
        w, m = self.word, len(f)
        return frozenset(w[a:b + m] for a, b in zip(occ, occ[1:]))

    def oddities(self, max_pal_len: int) -> frozenset[Oddity]:
        if max_pal_len > self.n_max:
            raise ValueError(f"max_pal_len {max_pal_len} exceeds n_max {self.n_max}")
        found: dict[str, Oddity] = {}
        pals = sorted((p for p in self.pal_index.palindromes() if len(p) <= max_pal_len),
                      key=lambda p: (len(p), p))
        for p in pals:
            for v in self.complete_return_words(p):
                if is_palindrome(v):
                    continue
                key = canonical(v)
                if key not in found:
                    found[key] = Oddity(key, key[::-1], p)
        return frozenset(found.values())

    def squares(self, min_half: int = 1, *, max_half: int | None = None,
                primitive: bool = False) -> frozenset[str]:
        """All ``w`` with ``min_half <= |w| <= max_half`` such that ``ww`` is a factor."""
        out: set[str] = set()
        for half, starts in square_starts(self.word, min_half, max_half):
            for i in starts:
                w = self.word[i:i + half]
                if not primitive or primitive_root(w) == w:
                    out.add(w)
        return frozenset(out)


def square_starts(word: str, min_half: int = 1, max_half: int | None = None):
    """Yield ``(half, positions)`` where ``word[i:i+2*half]`` is a square."""
    n = len(word)
    top = n // 2 if max_half is None else min(max_half, n // 2)
    if n < 2:
        return
    codes = np.frombuffer(word.encode("utf-32-le"), dtype=np.uint32)
    for half in range(max(min_half, 1), top + 1):
        eq = (codes[:-half] == codes[half:]).astype(np.int32)
        # positions i with eq[i:i+half] all true
        csum = np.concatenate(([0], np.cumsum(eq)))
        window = csum[half:] - csum[:-half]
        starts = np.flatnonzero(window == half)
        starts = starts[starts + 2 * half <= n]
        if starts.size:
            yield half, starts.tolist()


def build_factor_index(word: str, n_max: int) -> FactorIndex:
    return FactorIndex(word, n_max)


def factor_complexity(idx: FactorIndex, n: int) -> int:
    return idx.complexity(n)


def special_factors(idx: FactorIndex, n: int, side: Side) -> frozenset[str]:
    return idx.special_factors(n, side)


def is_closed_under_reversal(idx: FactorIndex, n: int) -> bool:
    return idx.is_closed_under_reversal(n)


def complete_return_words(idx: FactorIndex, f: str) -> frozenset[str]:
    return idx.complete_return_words(f)


def oddities(idx: FactorIndex, max_pal_len: int) -> frozenset[Oddity]:
    return idx.oddities(max_pal_len)


def squares(idx: FactorIndex, min_half: int = 1, **kwargs) -> frozenset[str]:
    return idx.squares(min_half, **kwargs)
