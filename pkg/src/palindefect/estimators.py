"""scikit-learn style wrappers so the analyses drop into pipelines and grid
searches.  Samples are words (or word sources); features are integers."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .factors import FactorIndex
from .palindex import PalIndex
from .validation import check_count, check_fraction, check_source, check_words
from .verify import (DIVERGENCE_THRESHOLD, conjecture_report, equivalence_audit,
                     periodic_reduction)

__all__ = ["DefectTransformer", "ComplexityTransformer", "ConjectureVerifier", "PeriodicReducer"]


class DefectTransformer(TransformerMixin, BaseEstimator):
    """Map each word to its palindromic defect.

    With ``profile=True`` the output row is the defect of every prefix,
    right-padded with the final defect to the longest word of the batch.
    """

    def __init__(self, profile: bool = False):
        self.profile = profile

    def fit(self, X, y=None):
        check_words(X)
        self.is_fitted_ = True
        return self

    def transform(self, X):
        check_is_fitted(self)
        words = check_words(X)
        if not self.profile:
            return np.array([[PalIndex(w).defect] for w in words], dtype=np.int64)
        profiles = [PalIndex(w).defect_profile for w in words]
        width = max((len(p) for p in profiles), default=1)
        return np.array([p + [p[-1]] * (width - len(p)) for p in profiles], dtype=np.int64)


def _complexities(word: str, top: int):
    """``C(0..top)`` and ``P(0..top)``; zero beyond the word length."""
    C = [0] * (top + 1)
    C[0] = 1
    if word:
        idx = FactorIndex(word, len(word) - 1)
        for n in range(1, min(top, len(word)) + 1):
            C[n] = idx.complexity(n)
    pidx = PalIndex(word)
    P = [pidx.palindromic_complexity(n) for n in range(top + 1)]
    return C, P


class ComplexityTransformer(TransformerMixin, BaseEstimator):
    """Per-word ``C(n)``, ``P(n)`` or ``T(n)`` for ``n = 0..n_max``."""

    _kinds = ("factor", "palindromic", "T")

    def __init__(self, n_max: int = 10, kind: str = "factor"):
        self.n_max = n_max
        self.kind = kind

    def fit(self, X, y=None):
        check_count(self.n_max, "n_max")
        if self.kind not in self._kinds:
            raise ValueError(f"kind must be one of {self._kinds}, got {self.kind!r}")
        check_words(X)
        self.n_features_out_ = self.n_max + 1
        return self

    def transform(self, X):
        check_is_fitted(self)
        rows = []
        for w in check_words(X):
            C, P = _complexities(w, self.n_max + 1)
            if self.kind == "factor":
                rows.append(C[:self.n_max + 1])
            elif self.kind == "palindromic":
                rows.append(P[:self.n_max + 1])
            else:
                rows.append([C[n + 1] - C[n] + 2 - P[n + 1] - P[n] for n in range(self.n_max + 1)])
        return np.array(rows, dtype=np.int64).reshape(-1, self.n_max + 1)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self)
        prefix = {"factor": "C", "palindromic": "P", "T": "T"}[self.kind]
        return np.array([f"{prefix}{n}" for n in range(self.n_max + 1)], dtype=object)


class ConjectureVerifier(BaseEstimator):
    """Check ``2 D(u) = sum T(n)`` on a length-``length`` prefix of a source.

    ``fit`` analyses one source and stores the report; ``predict`` returns
    the verdict for each source of a batch.
    """

    def __init__(self, length: int = 1000, n_max: int = 100, flat_fraction: float = 0.5,
                 tail_fraction: float = 0.25, divergence_threshold: int = DIVERGENCE_THRESHOLD,
                 audit: bool = False):
        self.length = length
        self.n_max = n_max
        self.flat_fraction = flat_fraction
        self.tail_fraction = tail_fraction
        self.divergence_threshold = divergence_threshold
        self.audit = audit

    def _report(self, source):
        length = check_count(self.length, "length", 1)
        n_max = check_count(self.n_max, "n_max")
        if n_max + 1 > length:
            raise ValueError(f"n_max + 1 = {n_max + 1} exceeds length {length}")
        return conjecture_report(
            check_source(source), length, n_max,
            flat_fraction=check_fraction(self.flat_fraction, "flat_fraction"),
            tail_fraction=check_fraction(self.tail_fraction, "tail_fraction"),
            divergence_threshold=self.divergence_threshold,
        )

    def fit(self, X, y=None):
        self.report_ = self._report(X)
        self.defect_ = self.report_.defect
        self.t_values_ = np.array(self.report_.t_values, dtype=np.int64)
        self.verdict_ = self.report_.verdict
        if self.audit:
            self.audit_ = equivalence_audit(check_source(X), self.length)
        return self

    def predict(self, X):
        return np.array([self._report(s).verdict for s in X], dtype=object)


class PeriodicReducer(BaseEstimator):
    """Find a periodic word with the same defect and T series as the source.

    ``M=None`` derives the coverage length from the equivalence audit.
    """

    def __init__(self, length: int = 10_000, n_max: int = 60, M: int | None = None):
        self.length = length
        self.n_max = n_max
        self.M = M

    def fit(self, X, y=None):
        M = None if self.M is None else check_count(self.M, "M", 1)
        self.result_ = periodic_reduction(check_source(X), check_count(self.length, "length", 1),
                                          check_count(self.n_max, "n_max"), M)
        self.period_ = self.result_.w
        return self

    def transform(self, X):
        """The reduced period of every source (``None`` where inapplicable)."""
        out = []
        for s in X:
            r = periodic_reduction(check_source(s), self.length, self.n_max, self.M)
            out.append(r.w)
        return out
