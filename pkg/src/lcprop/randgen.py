"""Random exact fixtures for the randomized suites.

All generators take a :class:`random.Random` so runs are reproducible from
a seed.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .seq_core import ExactSeq, normalize


def random_lc_seq(rng: random.Random, max_len: int = 12, max_value: int = 100,
                  as_pmf: bool = False) -> ExactSeq:
    """Integer log-concave sequence with no internal zeros.

    Built greedily: each new term is drawn below ``u[i]**2 / u[i-1]``.
    Occasionally a leading zero is prepended (harmless for LC).
    """
    length = rng.randint(1, max_len)
    vals = [rng.randint(1, max_value)]
    if length > 1:
        vals.append(rng.randint(1, max_value))
    while len(vals) < length:
        bound = min(max_value, vals[-1] ** 2 // vals[-2])
        if bound < 1:
            break
        vals.append(rng.randint(1, bound))
    if len(vals) < max_len and rng.random() < 0.1:
        vals.insert(0, 0)
    s = ExactSeq(vals)
    return normalize(s) if as_pmf else s


def random_pmf(rng: random.Random, max_len: int = 10, max_value: int = 10) -> ExactSeq:
    """Arbitrary finitely supported mass function with ``pX(0) > 0``."""
    length = rng.randint(1, max_len)
    vals = [rng.randint(1, max_value)] + [rng.randint(0, max_value) for _ in range(length - 1)]
    return normalize(ExactSeq(vals))


def random_param(rng: random.Random, max_den: int = 20) -> Fraction:
    den = rng.randint(2, max_den)
    return Fraction(rng.randint(1, den - 1), den)


def random_ratio_bounded(rng: random.Random, p: Fraction, max_len: int = 10) -> ExactSeq:
    """``pX`` with ``pX(i+1) <= p pX(i)`` for all ``i >= 1``; ``pX(1)/pX(0)`` is free."""
    length = rng.randint(2, max_len)
    vals = [Fraction(rng.randint(1, 20)), Fraction(rng.randint(1, 20))]
    while len(vals) < length:
        den = rng.randint(1, 12)
        shrink = Fraction(rng.randint(0, den), den)
        vals.append(vals[-1] * p * shrink)
    return normalize(ExactSeq(vals))


def random_gapped(rng: random.Random, max_len: int = 10) -> ExactSeq:
    """Mass function with at least one isolated zero between positive masses."""
    length = rng.randint(3, max_len)
    vals = [rng.randint(0, 10) for _ in range(length)]
    g = rng.randint(1, length - 2)
    vals[g] = 0
    vals[g - 1] = rng.randint(1, 10)
    vals[g + 1] = rng.randint(1, 10)
    return normalize(ExactSeq(vals))
