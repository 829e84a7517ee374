"""Exact real-root counting with Sturm sequences over the rationals.

Used to decide whether a generating polynomial with non-negative
coefficients has only real, negative roots, which forces its coefficient
sequence to be log-concave.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

from .seq_core import ExactSeq, as_fraction, is_log_concave

__all__ = [
    "ExactPoly",
    "RealRootVerdict",
    "poly_from_seq",
    "sturm_sequence",
    "sturm_real_root_count",
    "square_free_part",
    "square_free_chain",
    "real_root_count_with_multiplicity",
    "factor_out_x",
    "all_roots_real_negative",
    "realroots_implies_lc_check",
]

Bound = Union[Fraction, int, float, None]
INF = float("inf")


class ExactPoly:
    """Polynomial with rational coefficients in ascending order of degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [as_fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs) if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(-c for c in self.coeffs)

    def derivative(self) -> "ExactPoly":
        return ExactPoly([k * c for k, c in enumerate(self.coeffs)][1:] or [0])

    def divmod(self, other: "ExactPoly") -> tuple["ExactPoly", "ExactPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / other.lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return ExactPoly(quot), ExactPoly(rem[:dq] or [0])

    def primitive(self) -> "ExactPoly":
        """Positive multiple with coprime integer coefficients."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return ExactPoly(Fraction(v, g) for v in ints)

    def monic(self) -> "ExactPoly":
        return ExactPoly(c / self.lead for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "ExactPoly":
        if isinstance(data, (str, bytes)) or not isinstance(data, Sequence) or not data:
            raise ValueError("polynomial JSON must be a non-empty array")
        return cls(data)


def poly_from_seq(s: ExactSeq) -> ExactPoly:
    return ExactPoly(s.values)


def _gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def sturm_sequence(p: ExactPoly) -> list[ExactPoly]:
    """Sturm chain ``p, p', -rem(...)``; each term rescaled by a positive
    constant to keep coefficients small (signs are unaffected)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm sequence")
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append((-rem).primitive())
    return [q for q in chain if not q.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(q: ExactPoly, x: Bound) -> int:
    if x == INF:
        return _sign(q.lead)
    if x == -INF:
        return _sign(q.lead) * (-1 if q.degree % 2 else 1)
    return _sign(q(x))


def _variations(chain: list[ExactPoly], x: Bound) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _bound(x: Bound, default: float) -> Bound:
    if x is None:
        return default
    if isinstance(x, float):
        if x in (INF, -INF):
            return x
        raise TypeError("finite bounds must be exact rationals")
    return as_fraction(x)


def square_free_part(p: ExactPoly) -> ExactPoly:
    g = _gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return p.divmod(g)[0]


def sturm_real_root_count(p: ExactPoly, lo: Bound = None, hi: Bound = None) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``None`` means infinite.

    Repeated roots are removed first (division by ``gcd(p, p')``), so the
    count is of distinct roots.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    lo = _bound(lo, -INF)
    hi = _bound(hi, INF)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got {lo}, {hi}")
    if p.degree == 0:
        return 0
    chain = sturm_sequence(square_free_part(p))
    return _variations(chain, lo) - _variations(chain, hi)


def square_free_chain(p: ExactPoly) -> list[ExactPoly]:
    """``p, gcd(p, p'), gcd of that with its derivative, ...`` down to a constant.

    A root of multiplicity ``k`` appears in the first ``k`` members, so
    summing distinct-root counts along the chain counts with multiplicity.
    """
    chain = [p]
    while chain[-1].degree > 0:
        chain.append(_gcd(chain[-1], chain[-1].derivative()))
    return chain[:-1]


def real_root_count_with_multiplicity(p: ExactPoly, lo: Bound = None, hi: Bound = None) -> int:
    return sum(sturm_real_root_count(q, lo, hi) for q in square_free_chain(p))


def factor_out_x(p: ExactPoly) -> tuple[int, ExactPoly]:
    """Split ``p = x^k * p1`` with ``p1(0) != 0``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    return k, ExactPoly(p.coeffs[k:])


def all_roots_real_negative(p: ExactPoly) -> bool:
    """True iff every root (with multiplicity) is real and strictly negative.

    A root at zero makes this false; strip it with :func:`factor_out_x`.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("expected non-negative coefficients")
    if p.degree == 0:
        return True
    if p.coeffs[0] == 0:
        return False
    # p(0) != 0, so (-inf, 0] and (-inf, 0) hold the same roots
    return real_root_count_with_multiplicity(p, None, 0) == p.degree


@dataclass(frozen=True)
class RealRootVerdict:
    seq: ExactSeq
    zero_roots: int
    real_negative: bool
    is_lc: bool

    @property
    def holds(self) -> bool:
        """The implication real-negative-roots => LC (vacuous otherwise)."""
        return self.is_lc or not self.real_negative

    def to_json(self) -> dict:
        return {
            "seq": self.seq.to_json(),
            "zero_roots": self.zero_roots,
            "real_negative": self.real_negative,
            "is_lc": self.is_lc,
            "holds": self.holds,
        }


def realroots_implies_lc_check(s: ExactSeq) -> RealRootVerdict:
    """Test real-negative-rootedness after removing roots at zero.

    Leading zeros of ``s`` only shift the sequence, so they are factored
    out before the root test; the LC verdict is on ``s`` itself.
    """
    if s.is_zero():
        raise ValueError("zero sequence has no generating polynomial")
    k, core = factor_out_x(poly_from_seq(s))
    return RealRootVerdict(
        seq=s,
        zero_roots=k,
        real_negative=all_roots_real_negative(core),
        is_lc=is_log_concave(s).is_lc,
    )
