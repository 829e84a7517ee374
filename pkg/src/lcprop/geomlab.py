"""Log-concavity of ``X + Geom(p)`` for finitely supported ``X``.

``Geom(p)`` has mass ``(1-p) p^i``. The law of ``X + Geom(p)`` obeys the
first-order recurrence ``q(i) = (1-p) pX(i) + p q(i-1)``, which gives

    q(i)^2 - q(i+1) q(i-1) = (1-p) (q(i) pX(i) - q(i-1) pX(i+1)).

So the sum is log-concave iff the right-hand bracket is non-negative for
every ``i >= 1``. Beyond the support of ``X`` the bracket vanishes, hence a
finite scan is a complete decision. Geometric laws are never materialised
as infinite objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .seq_core import ExactSeq, as_fraction, convolve, has_internal_zero, is_log_concave

__all__ = [
    "GeomParam",
    "GeomSumAnalysis",
    "MixCoeffs",
    "OrderVerdict",
    "ThresholdInterval",
    "NoThresholdError",
    "geom_pmf",
    "geom_sum_pmf",
    "geom_sum_analyze",
    "ratio_bound_test",
    "gap_detect",
    "mix_coefficients",
    "check_mixing_identity",
    "verify_order",
    "min_lc_geom_param",
    "cv_membership",
]


class NoThresholdError(ValueError):
    """No geometric parameter can make the sum log-concave."""


@dataclass(frozen=True)
class GeomParam:
    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", as_fraction(self.p))
        if not (0 < self.p < 1):
            raise ValueError(f"geometric parameter must lie in (0, 1), got {self.p}")

    @classmethod
    def coerce(cls, p) -> "GeomParam":
        return p if isinstance(p, GeomParam) else cls(p)


def _p(p) -> Fraction:
    return GeomParam.coerce(p).p


def geom_pmf(p, length: int) -> ExactSeq:
    """``(1-p) p^i`` for ``i < length``."""
    p = _p(p)
    return ExactSeq((1 - p) * p ** i for i in range(length))


def geom_sum_pmf(pX: ExactSeq, p, length: int) -> list[Fraction]:
    """First ``length`` masses of ``X + Geom(p)`` via the recurrence."""
    p = _p(p)
    q = []
    prev = Fraction(0)
    for i in range(length):
        prev = (1 - p) * pX[i] + p * prev
        q.append(prev)
    return q


@dataclass(frozen=True)
class GeomSumAnalysis:
    pX: ExactSeq
    p: Fraction
    q_values: tuple[Fraction, ...]
    criterion_values: tuple[tuple[int, Fraction], ...]
    is_lc: bool
    decisive: bool
    horizon: int

    @property
    def first_failure(self) -> Optional[int]:
        for i, v in self.criterion_values:
            if v < 0:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "pX": self.pX.to_json(),
            "horizon": self.horizon,
            "is_lc": self.is_lc,
            "decisive": self.decisive,
            "q_values": [str(v) for v in self.q_values],
            "criterion_values": [[i, str(v)] for i, v in self.criterion_values],
        }


def geom_sum_analyze(pX: ExactSeq, p) -> GeomSumAnalysis:
    if pX.total() == 0:
        raise ValueError("pX has no mass")
    p = _p(p)
    horizon = len(pX) + 1
    q = geom_sum_pmf(pX, p, horizon + 2)
    crit = tuple((i, q[i] * pX[i] - q[i - 1] * pX[i + 1]) for i in range(1, horizon + 1))
    return GeomSumAnalysis(
        pX=pX,
        p=p,
        q_values=tuple(q),
        criterion_values=crit,
        is_lc=all(v >= 0 for _, v in crit),
        decisive=horizon >= pX.support()[1] + 1,
        horizon=horizon,
    )


def ratio_bound_test(pX: ExactSeq, p) -> bool:
    """``pX(i+1) <= p pX(i)`` for every ``i >= 1`` (sufficient for LC).

    Written multiplicatively, so a zero at ``i >= 1`` must be followed by
    zeros only.
    """
    p = _p(p)
    return all(pX[i + 1] <= p * pX[i] for i in range(1, len(pX)))


def gap_detect(pX: ExactSeq) -> Optional[int]:
    for i in range(1, len(pX) - 1):
        if pX[i] == 0 and pX[i - 1] > 0 and pX[i + 1] > 0:
            return i
    return None


@dataclass(frozen=True)
class MixCoeffs:
    """Weights with ``q_{p2}(i) = sum_r b[r] q_{p1}(i - r)`` for ``p1 <= p2``."""

    p1: Fraction
    p2: Fraction
    b: tuple[Fraction, ...]


def mix_coefficients(p1, p2, horizon: int) -> MixCoeffs:
    p1, p2 = _p(p1), _p(p2)
    if p1 > p2:
        raise ValueError(f"need p1 <= p2, got {p1} > {p2}")
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    lead = (1 - p2) / (1 - p1)
    scale = (p2 - p1) * (1 - p2) / (1 - p1)
    b = [lead] + [scale * p2 ** (r - 1) for r in range(1, horizon + 1)]
    return MixCoeffs(p1=p1, p2=p2, b=tuple(b))


def check_mixing_identity(pX: ExactSeq, mix: MixCoeffs) -> bool:
    n = len(mix.b)
    q1 = geom_sum_pmf(pX, mix.p1, n)
    q2 = geom_sum_pmf(pX, mix.p2, n)
    return all(
        q2[i] == sum((mix.b[r] * q1[i - r] for r in range(i + 1)), Fraction(0))
        for i in range(n)
    )


@dataclass(frozen=True)
class OrderVerdict:
    p1: Fraction
    p2: Fraction
    lc_at_p1: bool
    lc_at_p2: bool
    brackets: tuple[tuple[int, int, Fraction], ...]
    expansion_ok: bool

    @property
    def implication_holds(self) -> bool:
        return self.lc_at_p2 or not self.lc_at_p1

    @property
    def brackets_nonnegative(self) -> bool:
        return all(v >= 0 for _, _, v in self.brackets)

    @property
    def ok(self) -> bool:
        if not self.expansion_ok or not self.implication_holds:
            return False
        return self.brackets_nonnegative or not self.lc_at_p1


def verify_order(pX: ExactSeq, p1, p2) -> OrderVerdict:
    """Compare the verdicts at ``p1 <= p2`` and re-derive why they must agree.

    The deficit of ``X + Geom(p2)`` at ``i`` expands as
    ``(1-p2)/(1-p1) * sum_r b_r * B(i, r)`` with

        B(i, r) = q1(i-r) (q1(i) - p1 q1(i-1)) - q1(i-r-1) (q1(i+1) - p1 q1(i)),

    and every ``B(i, r)`` is non-negative once the ``p1`` sum is log-concave.
    Both the expansion and the signs are checked exactly.
    """
    p1, p2 = _p(p1), _p(p2)
    if p1 > p2:
        raise ValueError(f"need p1 <= p2, got {p1} > {p2}")
    a1 = geom_sum_analyze(pX, p1)
    a2 = geom_sum_analyze(pX, p2)
    horizon = a1.horizon
    mix = mix_coefficients(p1, p2, horizon + 1)
    q1 = geom_sum_pmf(pX, p1, horizon + 2)
    q2 = geom_sum_pmf(pX, p2, horizon + 2)

    def g(j):
        return q1[j] if j >= 0 else Fraction(0)

    brackets = []
    expansion_ok = True
    for i in range(1, horizon + 1):
        total = Fraction(0)
        for r in range(i + 1):
            br = g(i - r) * (g(i) - p1 * g(i - 1)) - g(i - r - 1) * (g(i + 1) - p1 * g(i))
            brackets.append((i, r, br))
            total += mix.b[r] * br
        deficit = q2[i] * q2[i] - q2[i + 1] * q2[i - 1]
        if deficit != (1 - p2) / (1 - p1) * total:
            expansion_ok = False
    return OrderVerdict(
        p1=p1,
        p2=p2,
        lc_at_p1=a1.is_lc,
        lc_at_p2=a2.is_lc,
        brackets=tuple(brackets),
        expansion_ok=expansion_ok,
    )


@dataclass(frozen=True)
class ThresholdInterval:
    """Bracket ``[lo, hi]`` around the least ``p`` making ``X + Geom(p)`` LC.

    The sum is not LC at ``lo`` unless ``lo == 0`` (the boundary) and is LC
    at ``hi`` unless ``hi == 1``, which signals that no probe below 1 worked.
    Bisection is sound because the LC property is monotone in ``p``.
    """

    lo: Fraction
    hi: Fraction
    probes: int

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "probes": self.probes}


def min_lc_geom_param(pX: ExactSeq, denominator_bound: int) -> ThresholdInterval:
    if denominator_bound < 1:
        raise ValueError("denominator_bound must be >= 1")
    if pX.total() == 0:
        raise ValueError("pX has no mass")
    gap = gap_detect(pX)
    if gap is not None:
        raise NoThresholdError(f"support has a gap at {gap}; no geometric parameter works")
    if has_internal_zero(pX):
        # a longer run of zeros ending at j gives criterion -q(j-1) pX(j+1) < 0
        raise NoThresholdError("support has a run of zeros; no geometric parameter works")
    lo, hi = Fraction(0), Fraction(1)
    width = Fraction(1, denominator_bound)
    probes = 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        probes += 1
        if geom_sum_analyze(pX, mid).is_lc:
            hi = mid
        else:
            lo = mid
    return ThresholdInterval(lo=lo, hi=hi, probes=probes)


def cv_membership(pV: ExactSeq, pW: ExactSeq, i_max: Optional[int] = None) -> bool:
    """Whether ``V + W`` (independent) is log-concave, on indices ``<= i_max``."""
    rep = is_log_concave(convolve(pV, pW))
    return all(d >= 0 for i, d in rep.deficits if i_max is None or i <= i_max)
