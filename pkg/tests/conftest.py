"""Brute-force oracles, deliberately independent of the package internals."""

from itertools import product

import pytest


def naive_palindromes(w):
    n = len(w)
    subs = {""} | {w[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    return {s for s in subs if s == s[::-1]}


def naive_defect(w):
    return len(w) + 1 - len(naive_palindromes(w))


def naive_factors(w, n):
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def naive_lps(w):
    for k in range(len(w), -1, -1):
        s = w[len(w) - k:]
        if s == s[::-1]:
            return s


def naive_occurrences(w, f):
    return [i for i in range(len(w) - len(f) + 1) if w[i:i + len(f)] == f]


def naive_squares(w, min_half):
    n = len(w)
    return {w[i:i + h] for h in range(max(min_half, 1), n // 2 + 1)
            for i in range(n - 2 * h + 1) if w[i:i + h] == w[i + h:i + 2 * h]}


def naive_t(w, n):
    def P(m):
        return sum(1 for f in naive_factors(w, m) if f == f[::-1])
    return len(naive_factors(w, n + 1)) - len(naive_factors(w, n)) + 2 - P(n + 1) - P(n)


def iterate_morphism(images, seed, length):
    w = seed
    while len(w) < length:
        w = "".join(images[c] for c in w)
    return w[:length]


def words_upto(alphabet, max_len):
    for n in range(max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


@pytest.fixture(scope="session")
def fib_10k():
    return iterate_morphism({"a": "ab", "b": "a"}, "a", 10_000)


@pytest.fixture(scope="session")
def tm_16k():
    return iterate_morphism({"a": "ab", "b": "ba"}, "a", 16_384)


@pytest.fixture(scope="session")
def rote_20k():
    return iterate_morphism({"0": "001", "1": "111"}, "0", 20_000)
