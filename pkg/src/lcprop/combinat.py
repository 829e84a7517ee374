"""Rows of classical combinatorial triangles as exact sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .seq_core import ExactSeq, as_fraction, convolve

__all__ = [
    "FAMILIES",
    "TriangleRow",
    "binomial_row",
    "stirling1_row",
    "stirling2_row",
    "q_stirling2_row",
    "eulerian_row",
    "inversion_numbers",
    "bernoulli_sum",
    "bell_number",
    "triangle_row",
]

FAMILIES = ("binomial", "stirling1", "stirling2", "q_stirling2", "eulerian", "inversions")


@dataclass(frozen=True)
class TriangleRow:
    family: str
    n: int
    row: ExactSeq
    q: Optional[Fraction] = None

    def to_json(self) -> dict:
        out = {"family": self.family, "n": self.n, "row": self.row.to_json()}
        if self.q is not None:
            out["q"] = str(self.q)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TriangleRow":
        if data.get("family") not in FAMILIES:
            raise ValueError(f"unknown family {data.get('family')!r}")
        q = data.get("q")
        return cls(
            family=data["family"],
            n=int(data["n"]),
            row=ExactSeq.from_json(data["row"]),
            q=None if q is None else as_fraction(q),
        )


def _check_n(n: int, least: int) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def binomial_row(n: int) -> TriangleRow:
    _check_n(n, 0)
    return TriangleRow("binomial", n, ExactSeq(comb(n, k) for k in range(n + 1)))


def stirling1_row(n: int) -> TriangleRow:
    """Unsigned Stirling numbers of the first kind, ``S1(n, 0..n)``."""
    _check_n(n, 1)
    row = [1]
    for m in range(n):
        # S1(m+1, k) = S1(m, k-1) + m S1(m, k)
        row = [(row[k - 1] if k >= 1 else 0) + (m * row[k] if k < len(row) else 0)
               for k in range(len(row) + 1)]
    return TriangleRow("stirling1", n, ExactSeq(row))


def stirling2_row(n: int) -> TriangleRow:
    _check_n(n, 1)
    row = [1]
    for _ in range(n):
        row = [(row[k - 1] if k >= 1 else 0) + (k * row[k] if k < len(row) else 0)
               for k in range(len(row) + 1)]
    return TriangleRow("stirling2", n, ExactSeq(row))


def _q_int(k: int, q: Fraction) -> Fraction:
    return sum((q ** j for j in range(k)), Fraction(0))


def q_stirling2_row(n: int, q) -> TriangleRow:
    """q-analogue ``S(n,k) = q^(k-1) S(n-1,k-1) + [k]_q S(n-1,k)``.

    At ``q = 1`` this is ``stirling2_row``; it differs from the other common
    q-analogue (no ``q^(k-1)`` weight) by the factor ``q^C(k,2)``.
    """
    _check_n(n, 1)
    q = as_fraction(q)
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    row = [Fraction(1)]
    for _ in range(n):
        nxt = []
        for k in range(len(row) + 1):
            val = Fraction(0)
            if k >= 1:
                val += q ** (k - 1) * row[k - 1]
            if k < len(row):
                val += _q_int(k, q) * row[k]
            nxt.append(val)
        row = nxt
    return TriangleRow("q_stirling2", n, ExactSeq(row), q=q)


def eulerian_row(n: int) -> TriangleRow:
    """Permutations of ``n`` letters by number of ascents, ``k = 0..n-1``."""
    _check_n(n, 1)
    row = [1]
    for m in range(2, n + 1):
        # E(m, k) = (k+1) E(m-1, k) + (m-k) E(m-1, k-1)
        row = [((k + 1) * row[k] if k < len(row) else 0) + ((m - k) * row[k - 1] if k >= 1 else 0)
               for k in range(m)]
    return TriangleRow("eulerian", n, ExactSeq(row))


def inversion_numbers(n: int) -> TriangleRow:
    """Permutations of ``n`` letters by number of inversions.

    Built as the product of the blocks ``1 + x + ... + x^i`` for
    ``i = 1..n-1``, i.e. an iterated convolution of all-ones sequences.
    """
    _check_n(n, 1)
    row = ExactSeq([1])
    for i in range(1, n):
        row = convolve(row, ExactSeq([1] * (i + 1)))
    return TriangleRow("inversions", n, row)


def bernoulli_sum(probs: Sequence) -> ExactSeq:
    """Mass function of a sum of independent Bernoulli variables."""
    out = ExactSeq([1])
    for raw in probs:
        p = as_fraction(raw)
        if not (0 <= p <= 1):
            raise ValueError(f"probability out of range: {p}")
        out = convolve(out, ExactSeq([1 - p, p]))
    return out


def bell_number(n: int) -> int:
    """Bell number via the Bell triangle (independent of the Stirling rows)."""
    _check_n(n, 0)
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def triangle_row(family: str, n: int, q=None) -> TriangleRow:
    if family == "binomial":
        return binomial_row(n)
    if family == "stirling1":
        return stirling1_row(n)
    if family == "stirling2":
        return stirling2_row(n)
    if family == "q_stirling2":
        if q is None:
            raise ValueError("q_stirling2 needs q")
        return q_stirling2_row(n, q)
    if family == "eulerian":
        return eulerian_row(n)
    if family == "inversions":
        return inversion_numbers(n)
    raise ValueError(f"unknown family {family!r}")

