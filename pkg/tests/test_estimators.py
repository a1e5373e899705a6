import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from palindefect.estimators import (ComplexityTransformer, ConjectureVerifier, DefectTransformer,
                                    PeriodicReducer)
from palindefect.validation import check_count, check_source, check_word, check_words
from palindefect.words import Alphabet, PeriodicWord, builtin_source, primitive_root

from conftest import naive_defect, naive_factors, naive_t


def test_defect_transformer():
    words = ["abca", "aabbaa", "", "abbabaab"]
    X = DefectTransformer().fit_transform(words)
    assert X.shape == (4, 1) and X.dtype == np.int64
    assert X[:, 0].tolist() == [naive_defect(w) for w in words]
    P = DefectTransformer(profile=True).fit_transform(["abca", "a"])
    assert P.tolist() == [[0, 0, 0, 0, 1], [0, 0, 0, 0, 0]]


def test_not_fitted():
    with pytest.raises(NotFittedError):
        DefectTransformer().transform(["ab"])


@pytest.mark.parametrize("kind", ["factor", "palindromic", "T"])
def test_complexity_transformer(kind):
    words = ["abcab", "aabbaabb", "a"]
    X = ComplexityTransformer(n_max=4, kind=kind).fit_transform(words)
    assert X.shape == (3, 5)
    for w, row in zip(words, X):
        for n in range(5):
            if kind == "factor":
                expected = len(naive_factors(w, n)) if n <= len(w) else 0
            elif kind == "palindromic":
                expected = sum(f == f[::-1] for f in naive_factors(w, n)) if n <= len(w) else 0
            else:
                if n + 1 > len(w):
                    continue
                expected = naive_t(w, n)
            assert row[n] == expected, (w, n)


def test_complexity_feature_names_and_bad_kind():
    t = ComplexityTransformer(n_max=2, kind="T").fit(["abc"])
    assert t.get_feature_names_out().tolist() == ["T0", "T1", "T2"]
    with pytest.raises(ValueError):
        ComplexityTransformer(kind="nope").fit(["ab"])


def test_params_clone_and_pipeline():
    t = ComplexityTransformer(n_max=3)
    assert t.get_params() == {"n_max": 3, "kind": "factor"}
    t.set_params(kind="palindromic")
    c = clone(t)
    assert c.get_params() == {"n_max": 3, "kind": "palindromic"} and c is not t
    pipe = make_pipeline(ComplexityTransformer(n_max=3), FunctionTransformer(lambda X: X.sum(axis=1)))
    assert pipe.fit_transform(["abab", "aaaa"]).tolist() == [1 + 2 + 2 + 2, 4]


def test_conjecture_verifier():
    v = ConjectureVerifier(length=1000, n_max=100).fit(builtin_source("ab-omega"))
    assert v.defect_ == 0 and v.t_values_.sum() == -1 and v.verdict_ == "gap"
    verdicts = ConjectureVerifier(length=2000, n_max=40).predict(
        [builtin_source("fibonacci"), builtin_source("thue-morse"), PeriodicWord("aab")])
    assert verdicts.tolist() == ["equality", "divergent-both", "equality"]
    v = ConjectureVerifier(length=2000, n_max=40, audit=True).fit({"kind": "builtin", "name": "fibonacci"})
    assert v.audit_.consistent
    with pytest.raises(ValueError):
        ConjectureVerifier(length=10, n_max=10).fit(builtin_source("fibonacci"))
    with pytest.raises(ValueError):
        ConjectureVerifier(length=100, n_max=10, flat_fraction=1.5).fit(builtin_source("fibonacci"))


def test_periodic_reducer():
    r = PeriodicReducer(length=10_000, n_max=60, M=20).fit(builtin_source("fibonacci"))
    assert all(r.result_.claims) and r.period_ == r.result_.w
    (w,) = PeriodicReducer(length=3000, n_max=20).transform([PeriodicWord("ab")])
    assert primitive_root(w) in {"ab", "ba"}


def test_validation_helpers():
    alpha = Alphabet(("a", "b"))
    assert check_word([0, 1, 1], alpha) == "abb"
    assert check_word("ab", alpha) == "ab"
    with pytest.raises(ValueError):
        check_word([0, 2], alpha)
    with pytest.raises(ValueError):
        check_word([0, 1])
    with pytest.raises(TypeError):
        check_word(3.5)
    with pytest.raises(TypeError):
        check_words("abc")
    assert check_source("abc").prefix(3) == "abc"
    with pytest.raises(TypeError):
        check_source(42)
    with pytest.raises(TypeError):
        check_count(True, "n")
    with pytest.raises(ValueError):
        check_count(-1, "n")
