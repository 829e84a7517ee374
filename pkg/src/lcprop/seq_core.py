"""Exact non-negative sequences and the basic log-concavity operations.

Every value is a :class:`fractions.Fraction`; nothing in here ever touches a
float. Sequences are zero-extended outside their stored range, so ``s[-1]``
and ``s[len(s)]`` are both ``0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence, Union

RationalLike = Union[int, Fraction, str]

__all__ = [
    "ExactSeq",
    "LcReport",
    "as_fraction",
    "is_log_concave",
    "is_unimodal",
    "convolve",
    "normalize",
    "abel_oracle",
    "has_internal_zero",
]


def as_fraction(x) -> Fraction:
    """Parse ``x`` as an exact rational.

    Accepts ints, Fractions and strings such as ``"5/8"``, ``"3"`` or
    ``"0.25"``. Floats and bools are refused: a float is already rounded.
    """
    if isinstance(x, bool):
        raise TypeError(f"booleans are not rationals: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {x!r} as an exact rational") from exc
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


class ExactSeq:
    """Immutable finite sequence of non-negative rationals indexed from 0.

    Trailing zeros are trimmed on construction; the all-zero sequence is
    stored as ``[0]``. Indexing outside ``0..len-1`` returns ``0``.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[RationalLike]):
        vals = [as_fraction(v) for v in values]
        for i, v in enumerate(vals):
            if v < 0:
                raise ValueError(f"negative entry {v} at index {i}")
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        if not vals:
            vals = [Fraction(0)]
        self._values = tuple(vals)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._values):
            return self._values[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactSeq):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return "ExactSeq([" + ", ".join(str(v) for v in self._values) + "])"

    def total(self) -> Fraction:
        return sum(self._values, Fraction(0))

    def is_zero(self) -> bool:
        return self._values == (Fraction(0),)

    def support(self) -> tuple[int, int]:
        """First and last index carrying positive mass (``(0, 0)`` for zero)."""
        nz = [i for i, v in enumerate(self._values) if v]
        if not nz:
            return (0, 0)
        return (nz[0], nz[-1])

    def scale(self, c: RationalLike) -> "ExactSeq":
        c = as_fraction(c)
        return ExactSeq(v * c for v in self._values)

    def to_json(self) -> list[str]:
        return [str(v) for v in self._values]

    @classmethod
    def from_json(cls, data: Sequence) -> "ExactSeq":
        if isinstance(data, (str, bytes)) or not isinstance(data, Sequence):
            raise TypeError("sequence JSON must be an array")
        if len(data) == 0:
            raise ValueError("sequence JSON must be non-empty")
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "ExactSeq":
        """Parse a comma separated list such as ``"5/8, 1/4, 1/8"``."""
        parts = [p for p in text.replace(";", ",").split(",")]
        if not text.strip() or any(not p.strip() for p in parts):
            raise ValueError(f"malformed sequence {text!r}")
        return cls(as_fraction(p) for p in parts)


@dataclass(frozen=True)
class LcReport:
    is_lc: bool
    deficits: tuple[tuple[int, Fraction], ...]
    first_violation: Optional[int]
    contiguous: bool

    def to_json(self) -> dict:
        return {
            "is_lc": self.is_lc,
            "first_violation": self.first_violation,
            "contiguous": self.contiguous,
            "deficits": [[i, str(d)] for i, d in self.deficits],
        }


def has_internal_zero(s: ExactSeq) -> bool:
    """True if some zero sits strictly between two positive entries."""
    lo, hi = s.support()
    return any(s[i] == 0 for i in range(lo, hi + 1))


def is_log_concave(s: ExactSeq) -> LcReport:
    """Exact deficits ``s[i]**2 - s[i-1]*s[i+1]`` for ``1 <= i <= len(s)``.

    ``is_lc`` is the pointwise inequality only. A sequence such as
    ``[1, 0, 0, 1]`` passes it while having an internal run of zeros; the
    ``contiguous`` flag records that separately, since closure under
    convolution needs both.
    """
    deficits = []
    first = None
    for i in range(1, len(s) + 1):
        d = s[i] * s[i] - s[i - 1] * s[i + 1]
        deficits.append((i, d))
        if d < 0 and first is None:
            first = i
    return LcReport(
        is_lc=first is None,
        deficits=tuple(deficits),
        first_violation=first,
        contiguous=not has_internal_zero(s),
    )


def is_unimodal(s: ExactSeq) -> bool:
    vals = s.values
    j = 0
    while j + 1 < len(vals) and vals[j] <= vals[j + 1]:
        j += 1
    return all(vals[k] >= vals[k + 1] for k in range(j, len(vals) - 1))


def convolve(a: ExactSeq, b: ExactSeq) -> ExactSeq:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.values):
        if not x:
            continue
        for j, y in enumerate(b.values):
            out[i + j] += x * y
    return ExactSeq(out)


def normalize(s: ExactSeq) -> ExactSeq:
    tot = s.total()
    if tot == 0:
        raise ValueError("cannot normalize the all-zero sequence")
    return ExactSeq(v / tot for v in s.values)


def abel_oracle(p: ExactSeq, c: Sequence[RationalLike], l: int, m: int, i: int) -> Fraction:
    """Evaluate ``sum_{j<=i} p(l+j) p(m-j) c_j`` directly and by parts.

    The summation-by-parts form rewrites the sum against the prefix sums
    ``C_j`` of ``c``; the two evaluations must coincide exactly, and the
    common value is returned. Requires ``l >= m >= i >= 0``.
    """
    if not (l >= m >= i >= 0):
        raise ValueError(f"need l >= m >= i >= 0, got l={l}, m={m}, i={i}")
    if len(c) < i + 1:
        raise ValueError(f"need at least {i + 1} coefficients, got {len(c)}")
    cs = [as_fraction(x) for x in c[: i + 1]]

    direct = sum((p[l + j] * p[m - j] * cs[j] for j in range(i + 1)), Fraction(0))

    prefix = []
    run = Fraction(0)
    for x in cs:
        run += x
        prefix.append(run)
    by_parts = sum(
        ((p[l + j] * p[m - j] - p[l + j + 1] * p[m - j - 1]) * prefix[j] for j in range(i + 1)),
        Fraction(0),
    )
    by_parts += prefix[i] * p[l + i + 1] * p[m - i - 1]

    if direct != by_parts:
        raise ArithmeticError(f"summation by parts disagrees: {direct} != {by_parts}")
    return direct
