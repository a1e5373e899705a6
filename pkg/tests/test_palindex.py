import random

import pytest
from hypothesis import given, settings, strategies as st

from palindefect.palindex import (PalIndex, build_pal_index, defect, defective_positions,
                                  longest_palindromic_suffix, palindromic_complexity)

from conftest import iterate_morphism, naive_defect, naive_lps, naive_palindromes, words_upto


@pytest.mark.parametrize("w, profile", [
    ("abca", [0, 0, 0, 0, 1]),
    ("aaa", [0, 0, 0, 0]),
    ("", [0]),
])
def test_defect_profile_examples(w, profile):
    assert build_pal_index(w).defect_profile == profile
    # oracle: naive defect of every prefix
    assert [naive_defect(w[:i]) for i in range(len(w) + 1)] == profile


@pytest.mark.parametrize("w, d", [("abca", 1), ("aabbaa", 0), ("a", 0), ("c", 0)])
def test_defect_examples(w, d):
    assert defect(w) == d == naive_defect(w)


def test_palindromic_complexity_examples():
    idx = PalIndex("a" + "b" * 99)
    assert palindromic_complexity(idx, 2) == 1
    assert palindromic_complexity(idx, 0) == 1
    assert palindromic_complexity(idx, 101) == 0
    assert palindromic_complexity(PalIndex(""), 0) == 1
    with pytest.raises(ValueError):
        idx.palindromic_complexity(-1)


@pytest.mark.parametrize("w, i, expected", [("abca", 4, "a"), ("abba", 4, "abba"), ("cab", 1, "c"), ("abc", 0, "")])
def test_longest_palindromic_suffix_examples(w, i, expected):
    assert longest_palindromic_suffix(PalIndex(w), i) == expected


def test_lps_out_of_range():
    with pytest.raises(IndexError):
        PalIndex("ab").longest_palindromic_suffix(3)


def test_defective_positions_examples():
    assert defective_positions(PalIndex("abca")) == {4}
    assert defective_positions(PalIndex("aaa")) == set()
    tm = iterate_morphism({"a": "ab", "b": "ba"}, "a", 64)
    assert naive_defect(tm) > 0
    assert defective_positions(PalIndex(tm))


def test_exhaustive_binary_against_naive():
    for w in words_upto("ab", 12):
        assert PalIndex(w).defect == naive_defect(w), w


def test_random_ternary_against_naive():
    rng = random.Random(7)
    for _ in range(10_000):
        w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 14)))
        assert PalIndex(w).defect == naive_defect(w), w


@given(st.text(alphabet="abcd", max_size=60))
def test_index_invariants(w):
    idx = PalIndex(w)
    pals = naive_palindromes(w)
    assert set(idx.palindromes()) == pals - {""}
    assert len(idx) + idx.defect == len(w)
    assert sum(idx.palindromic_complexity(n) for n in range(len(w) + 2)) == len(w) + 1 - idx.defect
    prof = idx.defect_profile
    assert prof[0] == 0
    assert all(prof[i] <= prof[i + 1] <= prof[i] + 1 for i in range(len(w)))
    assert sum(not idx.new[i] for i in range(1, len(w) + 1)) == idx.defect
    for i in range(len(w) + 1):
        lps = naive_lps(w[:i])
        assert idx.longest_palindromic_suffix(i) == lps
        if i:
            # new(i) iff the lps occurs exactly once in the prefix
            unique = w[:i].find(lps) == i - len(lps)
            assert idx.new[i] == unique


def test_defect_is_monotone_on_factors():
    for w in words_upto("ab", 10):
        d = defect(w)
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                assert defect(w[i:j]) <= d


@settings(max_examples=50)
@given(st.text(alphabet="abc", min_size=1, max_size=200))
def test_profile_rows(w):
    rows = PalIndex(w).profile_rows()
    assert len(rows) == len(w) + 1
    i, d, lps_len, new = rows[-1]
    assert (i, d, lps_len) == (len(w), naive_defect(w), len(naive_lps(w)))
