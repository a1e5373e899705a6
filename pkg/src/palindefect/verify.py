"""T series, the defect/complexity equality check, finite-defect audits and
the reduction of a word to a periodic one with the same defect and T series.

The infinite sum of ``T(n)`` and the supremum defining ``D`` can only be
observed on a finite prefix.  Reports therefore carry a convergence
heuristic: the T series must vanish on the last ``tail_fraction`` of the
``n`` range and the defect profile must be flat over the last
``flat_fraction`` of the prefix.  That heuristic is a convention of this
package, not a certificate.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass, field
from typing import Optional

from .factors import FactorIndex, square_starts
from .palindex import PalIndex
from .words import PeriodicWord, WordSource, is_palindrome, primitive_root

__all__ = [
    "TSeries", "ConjectureReport", "AuditCaps", "EquivalenceAudit", "ReductionResult",
    "NoSquareError", "t_series", "conjecture_report", "equivalence_audit",
    "two_palindrome_decomposition", "periodic_defect", "periodic_t_values", "periodic_reduction",
]

DIVERGENCE_THRESHOLD = 10


@dataclass(frozen=True)
class TSeries:
    values: tuple[int, ...]
    tail_zero_from: Optional[int]
    # (n, T(n), closed at n, closed at n + 1) for every negative value
    negative: tuple[tuple[int, int, bool, bool], ...] = ()

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _tail_zero_from(values) -> Optional[int]:
    n = len(values)
    while n > 0 and values[n - 1] == 0:
        n -= 1
    return n if n < len(values) else None


def t_series(fidx: FactorIndex, pidx: PalIndex, n_max: int | None = None) -> TSeries:
    if fidx.word != pidx.word:
        raise ValueError("factor index and palindrome index were built on different words")
    n_max = fidx.n_max if n_max is None else n_max
    if n_max > fidx.n_max:
        raise ValueError(f"n_max {n_max} exceeds factor index cap {fidx.n_max}")
    C = [fidx.complexity(n) for n in range(n_max + 2)]
    P = [pidx.palindromic_complexity(n) for n in range(n_max + 2)]
    values = tuple(C[n + 1] - C[n] + 2 - P[n + 1] - P[n] for n in range(n_max + 1))
    negative = tuple(
        (n, t, fidx.is_closed_under_reversal(n), fidx.is_closed_under_reversal(n + 1))
        for n, t in enumerate(values) if t < 0
    )
    return TSeries(values, _tail_zero_from(values), negative)


def _closed_up_to(fidx: FactorIndex, top: int) -> int:
    m = 0
    for n in range(1, top + 1):
        if not fidx.is_closed_under_reversal(n):
            break
        m = n
    return m


@dataclass
class ConjectureReport:
    word: str
    L: int
    n_max: int
    defect: int
    t_sum: int
    t_values: tuple[int, ...]
    tail_zero_from: Optional[int]
    reversal_closed_up_to: int
    defect_flat: bool
    converged: bool
    verdict: str
    gap: Optional[int] = None
    reason: str = ""
    defect_profile_summary: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self) | {"t_values": list(self.t_values)}


def _profile_summary(profile: list[int]) -> dict:
    increases = [i for i in range(1, len(profile)) if profile[i] > profile[i - 1]]
    return {
        "final": profile[-1],
        "at_half": profile[len(profile) // 2],
        "increases": len(increases),
        "last_increase_at": increases[-1] if increases else None,
    }


def conjecture_report(source: WordSource | str, L: int, n_max: int, *,
                      flat_fraction: float = 0.5, tail_fraction: float = 0.25,
                      divergence_threshold: int = DIVERGENCE_THRESHOLD) -> ConjectureReport:
    if n_max + 1 > L:
        raise ValueError(f"n_max + 1 = {n_max + 1} exceeds prefix length {L}")
    word = source if isinstance(source, str) else source.prefix(L)
    if len(word) < L:
        raise ValueError(f"word of length {len(word)} is shorter than L={L}")
    word = word[:L]
    name = source.name if isinstance(source, WordSource) else word
    fidx = FactorIndex(word, n_max)
    pidx = PalIndex(word)
    ts = t_series(fidx, pidx, n_max)
    profile = pidx.defect_profile
    flat = profile[L] == profile[L - int(L * flat_fraction)]
    tail_needed = max(1, math.ceil((n_max + 1) * tail_fraction))
    tail_zero = ts.tail_zero_from is not None and ts.tail_zero_from <= n_max + 1 - tail_needed
    converged = flat and tail_zero
    d, total = pidx.defect, ts.total

    gap = None
    reason = ""
    if converged:
        if 2 * d == total:
            verdict = "equality"
        else:
            verdict, gap = "gap", total - 2 * d
    elif not flat and total > divergence_threshold:
        verdict = "divergent-both"
    else:
        verdict = "inapplicable"
        reason = ("defect profile still growing" if not flat
                  else "T series has no zero tail") + " without the other side diverging"

    return ConjectureReport(
        word=name, L=L, n_max=n_max, defect=d, t_sum=total, t_values=ts.values,
        tail_zero_from=ts.tail_zero_from, reversal_closed_up_to=_closed_up_to(fidx, n_max + 1),
        defect_flat=flat, converged=converged, verdict=verdict, gap=gap, reason=reason,
        defect_profile_summary=_profile_summary(profile),
    )


@dataclass(frozen=True)
class AuditCaps:
    n_max: int = 64
    palindrome_len: int = 48
    factor_len: int = 48


@dataclass
class EquivalenceAudit:
    K: Optional[int]
    H: Optional[int]
    N: Optional[int]
    defect_flat: bool
    # lengths at which each statement is violated inside its tested range
    K_failures: list[int]
    H_failures: list[int]
    N_failures: list[int]
    caps: AuditCaps

    @property
    def statements(self) -> dict[int, bool]:
        return {1: self.defect_flat, 2: self.K is not None, 3: self.H is not None, 4: self.N is not None}

    @property
    def consistent(self) -> bool:
        return len(set(self.statements.values())) == 1

    def failing(self) -> list[int]:
        return [k for k, ok in self.statements.items() if not ok]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["statements"] = {str(k): v for k, v in self.statements.items()}
        d["consistent"] = self.consistent
        return d


def _bound(failures: list[int], floor: int, cap: int) -> Optional[int]:
    """Least bound above every failure, if failures stay out of the top quarter."""
    bound = max(failures) + 1 if failures else floor
    return bound if bound <= cap - cap // 4 else None


def _lps_unioccurrent(f: str) -> bool:
    for k in range(len(f), 0, -1):
        p = f[len(f) - k:]
        if p == p[::-1]:
            return f.find(p) == len(f) - k
    return True


def equivalence_audit(source: WordSource | str, L: int, caps: AuditCaps | None = None, *,
                      flat_fraction: float = 0.5) -> EquivalenceAudit:
    """Empirical ``K``, ``H`` and ``N`` bounds of the four finite-defect statements.

    ``K``: complete return words of palindromes of length ``>= K`` are palindromes.
    ``H``: factors of length ``>= H`` have a unioccurrent longest palindromic suffix.
    ``N``: ``T(n) = 0`` for ``n >= N``.
    A bound is reported only when its violations stay below the last quarter
    of the tested range; otherwise it is ``None``.
    """
    caps = caps or AuditCaps()
    word = source if isinstance(source, str) else source.prefix(L)
    word = word[:L]
    n_max = min(caps.n_max, L - 1)
    fidx = FactorIndex(word, n_max)
    pidx = fidx.pal_index

    pal_cap = min(caps.palindrome_len, n_max)
    k_fail = sorted({
        len(p) for p in pidx.palindromes()
        if len(p) <= pal_cap and not all(is_palindrome(v) for v in fidx.complete_return_words(p))
    })

    h_cap = min(caps.factor_len, n_max + 1)
    h_fail = [h for h in range(1, h_cap + 1)
              if not all(_lps_unioccurrent(f) for f in fidx.factors(h))]

    ts = t_series(fidx, pidx, n_max)
    n_fail = [n for n, t in enumerate(ts.values) if t != 0]

    profile = pidx.defect_profile
    flat = profile[L] == profile[L - int(L * flat_fraction)]
    return EquivalenceAudit(
        K=_bound(k_fail, 1, pal_cap), H=_bound(h_fail, 1, h_cap), N=_bound(n_fail, 0, n_max),
        defect_flat=flat, K_failures=k_fail, H_failures=h_fail, N_failures=n_fail, caps=caps,
    )


def two_palindrome_decomposition(w: str) -> Optional[tuple[str, str]]:
    """Split ``w = pq`` into palindromes with ``|p|`` minimal, or ``None``."""
    for k in range(len(w) + 1):
        p, q = w[:k], w[k:]
        if is_palindrome(p) and is_palindrome(q):
            return p, q
    return None


def periodic_defect(w: str) -> int | float:
    """Defect of ``w^omega``: ``D(ww)`` when ``w`` is a product of two
    palindromes, ``math.inf`` otherwise."""
    if not w:
        raise ValueError("period must be nonempty")
    root = primitive_root(w)
    if root != w:
        warnings.warn(f"period {w!r} is not primitive; using its root {root!r}", stacklevel=2)
    if two_palindrome_decomposition(root) is None:
        return math.inf
    return PalIndex(root + root).defect


def periodic_t_values(w: str, n_max: int) -> tuple[int, ...]:
    """Exact ``T(0..n_max)`` of ``w^omega``.

    Every factor of ``w^omega`` starts at some position below ``|w|``, so
    counting windows that start there is exact; for ``n >= |w|`` the
    ``|w|`` windows of a primitive period are pairwise distinct.
    """
    w = primitive_root(w)
    p = len(w)
    text = (w * (2 + (n_max + 1) // p))[:p + n_max + 1]
    C = [len({text[i:i + n] for i in range(p)}) if n < p else p for n in range(n_max + 2)]
    pidx = PalIndex(text)
    P = [pidx.palindromic_complexity(n) for n in range(n_max + 2)]
    return tuple(C[n + 1] - C[n] + 2 - P[n + 1] - P[n] for n in range(n_max + 1))


class NoSquareError(RuntimeError):
    def __init__(self, message: str, largest: Optional[str]):
        super().__init__(message)
        self.largest = largest


@dataclass
class ReductionResult:
    applicable: bool
    reason: str = ""
    M: Optional[int] = None
    w: Optional[str] = None
    square_at: Optional[int] = None
    decomposition: Optional[tuple[str, str]] = None
    defect_u: Optional[int] = None
    defect_v: Optional[int] = None
    defect_v_prefix: Optional[int] = None
    t_u: tuple[int, ...] = ()
    t_v: tuple[int, ...] = ()
    t_v_sum: Optional[int] = None
    claims: tuple[bool, bool, bool] = (False, False, False)
    periodic_equality: bool = False

    @property
    def v(self) -> Optional[PeriodicWord]:
        return PeriodicWord(self.w) if self.w else None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["claims"] = list(self.claims)
        d["t_u"], d["t_v"] = list(self.t_u), list(self.t_v)
        return d


def _find_covering_square(word: str, M: int) -> tuple[str, int]:
    target = {word[i:i + M] for i in range(len(word) - M + 1)}
    smallest = M + len(target) - 1
    largest = None
    for half, starts in square_starts(word, smallest):
        seen = set()
        for i in starts:
            w = word[i:i + half]
            if w in seen:
                continue
            seen.add(w)
            largest = w
            if len({w[j:j + M] for j in range(half - M + 1)}) == len(target) and \
                    all(w.find(f) != -1 for f in target):
                return w, i
    raise NoSquareError(f"no square ww with w covering all length-{M} factors within the prefix", largest)


def periodic_reduction(source: WordSource | str, L: int, n_max: int = 60, M: int | None = None, *,
                       caps: AuditCaps | None = None) -> ReductionResult:
    """Replace ``u`` by ``v = w^omega`` where ``ww`` is a factor of ``u`` and
    ``w`` contains every factor of length ``M``; then check that ``w`` is a
    product of two palindromes, that ``D(v) = D(u)`` and that the T series
    agree up to ``n_max``.

    ``M`` defaults to ``max(N, H)`` from :func:`equivalence_audit`.  Raises
    :class:`NoSquareError` when the prefix holds no suitable square.
    """
    word = source if isinstance(source, str) else source.prefix(L)
    word = word[:L]
    report = conjecture_report(word, L, n_max)
    if not report.converged:
        return ReductionResult(False, reason="prefix has no flat defect tail and zero T tail")
    if M is None:
        audit = equivalence_audit(word, L, caps or AuditCaps(n_max=n_max))
        if audit.N is None or audit.H is None:
            return ReductionResult(False, reason="audit found no N or H bound")
        M = max(audit.N, audit.H)

    w, at = _find_covering_square(word, M)
    decomposition = two_palindrome_decomposition(w)
    defect_u = report.defect
    defect_v = PalIndex(w + w).defect
    v_prefix = PalIndex((w * 6)).defect
    t_u = report.t_values
    t_v_full = periodic_t_values(w, max(n_max, 2 * len(w)))
    t_v = t_v_full[:n_max + 1]
    claims = (
        decomposition is not None,
        defect_v == defect_u and v_prefix == defect_v,
        t_v == t_u,
    )
    t_v_sum = sum(t_v_full)
    return ReductionResult(
        applicable=True, M=M, w=w, square_at=at, decomposition=decomposition,
        defect_u=defect_u, defect_v=defect_v, defect_v_prefix=v_prefix,
        t_u=t_u, t_v=t_v, t_v_sum=t_v_sum, claims=claims,
        periodic_equality=2 * defect_v == t_v_sum,
    )
