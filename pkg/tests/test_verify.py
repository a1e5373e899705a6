import math

import pytest
from hypothesis import given, settings, strategies as st

from palindefect.factors import FactorIndex
from palindefect.palindex import PalIndex
from palindefect.verify import (AuditCaps, NoSquareError, conjecture_report, equivalence_audit,
                                periodic_defect, periodic_reduction, periodic_t_values, t_series,
                                two_palindrome_decomposition)
from palindefect.words import PeriodicWord, builtin_source, is_primitive, primitive_root

from conftest import naive_defect, naive_t, words_upto


def test_t_zero_when_all_letters_occur():
    for w in ("abca", "abcabcab", "aabbcc"):
        idx = FactorIndex(w, 1)
        assert t_series(idx, PalIndex(w), 1)[0] == 0


def test_t_series_ab_omega():
    w = "a" + "b" * 99
    ts = t_series(FactorIndex(w, 10), PalIndex(w), 10)
    assert ts.values == (0, -1) + (0,) * 9
    assert ts.total == -1 and ts.tail_zero_from == 2
    # negative T certifies non-closure at n or n + 1
    assert ts.negative == ((1, -1, True, False),)
    assert [naive_t(w, n) for n in range(11)] == list(ts.values)


def test_t_series_index_mismatch():
    with pytest.raises(ValueError, match="different words"):
        t_series(FactorIndex("abc", 1), PalIndex("abd"), 1)
    with pytest.raises(ValueError):
        t_series(FactorIndex("abcd", 1), PalIndex("abcd"), 2)


@settings(max_examples=100)
@given(st.text(alphabet="abc", min_size=3, max_size=60))
def test_t_series_matches_naive(w):
    n_max = min(6, len(w) - 2)
    ts = t_series(FactorIndex(w, n_max), PalIndex(w), n_max)
    assert list(ts.values) == [naive_t(w, n) for n in range(n_max + 1)]


def test_rote_t_vanishes(rote_20k):
    ts = t_series(FactorIndex(rote_20k, 64), PalIndex(rote_20k), 64)
    assert set(ts.values) == {0} and ts.tail_zero_from == 0


def test_conjecture_report_ab_omega():
    r = conjecture_report(builtin_source("ab-omega"), 1000, 100)
    assert (r.defect, r.t_sum, r.verdict, r.gap) == (0, -1, "gap", -1)
    assert r.reversal_closed_up_to == 1 and r.converged


def test_conjecture_report_rote():
    r = conjecture_report(builtin_source("rote"), 20000, 64)
    assert (r.defect, r.t_sum, r.verdict) == (0, 0, "equality")
    assert r.reversal_closed_up_to == 65


def test_conjecture_report_thue_morse(tm_16k):
    r = conjecture_report(builtin_source("thue-morse"), 16384, 128)
    assert r.verdict == "divergent-both"
    assert r.defect_profile_summary["at_half"] == PalIndex(tm_16k[:8192]).defect
    assert r.defect >= 10 and r.t_sum >= 10 and not r.defect_flat


def test_conjecture_report_inapplicable_and_errors():
    r = conjecture_report("abca", 4, 3)
    assert r.verdict == "inapplicable" and r.reason
    with pytest.raises(ValueError):
        conjecture_report("abca", 4, 4)
    with pytest.raises(ValueError):
        conjecture_report(builtin_source("fibonacci"), 10, 10)


def test_report_serialises():
    d = conjecture_report(builtin_source("fibonacci"), 500, 20).to_dict()
    assert d["verdict"] == "equality" and isinstance(d["t_values"], list)
    assert d["defect_profile_summary"]["final"] == 0


def test_audit_fibonacci():
    a = equivalence_audit(builtin_source("fibonacci"), 10_000)
    assert (a.H, a.N) == (1, 0)
    assert a.K is not None and a.K <= 2
    assert a.consistent and a.failing() == []


def test_audit_thue_morse():
    a = equivalence_audit(builtin_source("thue-morse"), 2 ** 14)
    assert not a.defect_flat
    assert a.K is None and a.K_failures and max(a.K_failures) > a.caps.palindrome_len * 3 // 4
    assert set(a.failing()) == {1, 2, 3, 4} and a.consistent


@pytest.mark.parametrize("period", ["aab", "abaab", "aabb"])
def test_audit_periodic(period):
    a = equivalence_audit(PeriodicWord(period), 3000)
    assert a.N is not None and a.N <= len(period)
    assert a.consistent


@pytest.mark.parametrize("w, expected", [
    ("ab", ("a", "b")),
    ("aba", ("", "aba")),
    ("aabc", None),
    ("", ("", "")),
])
def test_two_palindrome_decomposition(w, expected):
    assert two_palindrome_decomposition(w) == expected


def test_decomposition_oracle():
    for w in words_upto("abc", 6):
        splits = [k for k in range(len(w) + 1)
                  if w[:k] == w[:k][::-1] and w[k:] == w[k:][::-1]]
        got = two_palindrome_decomposition(w)
        assert got == ((w[:splits[0]], w[splits[0]:]) if splits else None)


def test_periodic_defect_examples():
    assert periodic_defect("ab") == 0 == naive_defect("abab")
    assert periodic_defect("aabc") == math.inf
    assert periodic_defect("aabb") == naive_defect("aabbaabb") == 0
    with pytest.raises(ValueError):
        periodic_defect("")
    with pytest.warns(UserWarning, match="not primitive"):
        assert periodic_defect("abab") == 0


def test_periodic_theorem_exhaustive_binary():
    for w in words_upto("ab", 8):
        if not is_primitive(w) or two_palindrome_decomposition(w) is None:
            continue
        nmax = 2 * len(w)
        text = PeriodicWord(w).prefix(max(4 * len(w) + nmax, nmax + 2))
        ts = t_series(FactorIndex(text, nmax), PalIndex(text), nmax)
        assert 2 * periodic_defect(w) == ts.total, w


@settings(max_examples=60)
@given(st.text(alphabet="abc", min_size=1, max_size=12))
def test_periodic_t_values_match_generic(w):
    nmax = 2 * len(w) + 3
    text = PeriodicWord(w).prefix(6 * len(w) + nmax)
    ts = t_series(FactorIndex(text, nmax), PalIndex(text), nmax)
    assert periodic_t_values(w, nmax) == ts.values


def test_ternary_claims_at_reachable_scale():
    # every claim about the infinite word that a prefix u_k can exhibit
    src = builtin_source("ternary-oddity")
    for k in range(4, 11):
        u = src.stage(k)
        idx = FactorIndex(u, k + 1)
        pidx = idx.pal_index
        for n in range(2, k + 1):
            assert pidx.palindromic_complexity(n) == 2
            assert idx.complexity(n + 1) - idx.complexity(n) >= 3
        for n in range(2, k):
            assert {"c" * n, "b" * n, "b" * (n - 1) + "c"} <= idx.special_factors(n, "left")
        assert "cb" not in idx.factors(2)


@pytest.mark.parametrize("name, length", [("fibonacci", 10_000), ("rote", 20_000)])
def test_periodic_reduction(name, length):
    word = builtin_source(name).prefix(length)
    r = periodic_reduction(word, length, 60, M=20)
    assert r.applicable and r.claims == (True, True, True)
    assert (r.w + r.w) in word
    assert all(word[i:i + 20] in r.w for i in range(length - 19))
    p, q = r.decomposition
    assert p + q == r.w and p == p[::-1] and q == q[::-1]
    assert r.defect_v == r.defect_u == 0 and r.t_v_sum == 0 and r.periodic_equality


def test_periodic_reduction_is_idempotent_on_periodic_sources():
    r = periodic_reduction(PeriodicWord("aab"), 3000, 30)
    assert r.applicable and r.claims == (True, True, True)
    root = primitive_root(r.w)
    assert len(root) == 3 and root in "aabaab"
    assert r.t_v == r.t_u


def test_periodic_reduction_derives_m_from_audit():
    r = periodic_reduction(builtin_source("fibonacci"), 5000, 40)
    assert r.applicable and r.M == 1 and all(r.claims)


def test_periodic_reduction_inapplicable_when_diverging():
    r = periodic_reduction(builtin_source("thue-morse"), 4096, 60)
    assert not r.applicable and "flat" in r.reason


def test_periodic_reduction_without_square():
    # covering all length-8 factors needs a longer square than the prefix holds
    with pytest.raises(NoSquareError):
        periodic_reduction(builtin_source("fibonacci").prefix(40), 40, 5, M=8)
