"""Palindromic suffix index (eertree) with the per-prefix defect profile."""

from __future__ import annotations

from typing import Iterator

__all__ = ["PalIndex", "build_pal_index", "defect", "palindromic_complexity",
           "longest_palindromic_suffix", "defective_positions"]

# node ids of the two roots
_IMAG = 0  # length -1
_EMPTY = 1  # length 0


class PalIndex:
    """All distinct palindromic factors of ``word``, built letter by letter.

    Node ``k`` is a distinct palindrome of length ``lengths[k]`` whose first
    occurrence ends at prefix length ``first_end[k]``.  For each prefix
    length ``i`` the index keeps the node of the longest palindromic suffix
    (``lps[i]``) and whether that palindrome is new at ``i``.  Appending a
    letter raises the defect by one exactly when the new longest palindromic
    suffix already occurred, so ``defect_profile[i]`` counts the non-new
    positions among ``1..i``.
    """

    def __init__(self, word: str):
        self.word = word
        self.lengths = [-1, 0]
        self.links = [_IMAG, _IMAG]
        self.first_end = [0, 0]
        self._edges: list[dict[str, int]] = [{}, {}]
        self.lps = [_EMPTY]
        self.new = [False]
        self.defect_profile = [0]

        last = _EMPTY
        for i, c in enumerate(word):
            last, created = self._extend(i, c, last)
            self.lps.append(last)
            self.new.append(created)
            self.defect_profile.append(self.defect_profile[-1] + (not created))

        self._counts = [0] * (len(word) + 2)
        for length in self.lengths[1:]:
            self._counts[length] += 1

    def _suffix_with_room(self, node: int, i: int, c: str) -> int:
        # walk suffix palindromes of word[:i] until one is preceded by c
        word, lengths, links = self.word, self.lengths, self.links
        while True:
            j = i - lengths[node] - 1
            if j >= 0 and word[j] == c:
                return node
            node = links[node]

    def _extend(self, i: int, c: str, last: int) -> tuple[int, bool]:
        parent = self._suffix_with_room(last, i, c)
        child = self._edges[parent].get(c)
        if child is not None:
            return child, False

        node = len(self.lengths)
        length = self.lengths[parent] + 2
        if length == 1:
            link = _EMPTY
        else:
            link = self._edges[self._suffix_with_room(self.links[parent], i, c)][c]
        self.lengths.append(length)
        self.links.append(link)
        self.first_end.append(i + 1)
        self._edges.append({})
        self._edges[parent][c] = node
        return node, True

    def __len__(self) -> int:
        """Number of distinct nonempty palindromic factors."""
        return len(self.lengths) - 2

    def __repr__(self) -> str:
        return f"PalIndex(|w|={len(self.word)}, palindromes={len(self)}, defect={self.defect})"

    @property
    def defect(self) -> int:
        return self.defect_profile[-1]

    def palindrome(self, node: int) -> str:
        end = self.first_end[node]
        return self.word[end - self.lengths[node]:end]

    def palindromes(self) -> Iterator[str]:
        """Distinct nonempty palindromic factors in order of first occurrence."""
        for node in range(2, len(self.lengths)):
            yield self.palindrome(node)

    def palindromic_complexity(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        if n == 0:
            return 1
        return self._counts[n] if n < len(self._counts) else 0

    def longest_palindromic_suffix(self, i: int) -> str:
        if not 0 <= i <= len(self.word):
            raise IndexError(f"position {i} outside 0..{len(self.word)}")
        length = self.lengths[self.lps[i]]
        return self.word[i - length:i]

    def lps_length(self, i: int) -> int:
        return self.lengths[self.lps[i]]

    def defective_positions(self) -> frozenset[int]:
        return frozenset(i for i in range(1, len(self.new)) if not self.new[i])

    def profile_rows(self) -> list[tuple[int, int, int, bool]]:
        """Rows ``(i, D(i), lps_length(i), new(i))`` for ``i = 0..|w|``."""
        return [(i, self.defect_profile[i], self.lps_length(i), self.new[i])
                for i in range(len(self.defect_profile))]


def build_pal_index(word: str) -> PalIndex:
    return PalIndex(word)


def defect(word: str) -> int:
    return PalIndex(word).defect


def palindromic_complexity(idx: PalIndex, n: int) -> int:
    return idx.palindromic_complexity(n)


def longest_palindromic_suffix(idx: PalIndex, i: int) -> str:
    return idx.longest_palindromic_suffix(i)


def defective_positions(idx: PalIndex) -> frozenset[int]:
    return idx.defective_positions()
