"""Dependent sums driven by a two-dimensional kernel.

A kernel ``K(w | v)`` plays the role of a conditional mass function without
the normalisation: the dependent sum of a base sequence ``pV`` is

    out[x] = sum_v pV[v] * K(x - v | v).

Log-concavity of ``out`` is controlled by the coefficient arrays

    a_i(r, s) = K(i-r | r) K(i-s | s) - K(i-r-1 | r) K(i-s+1 | s)

through a family of diagonal partial-sum inequalities (parts a and b below).
If ``pV`` is log-concave and every partial sum is non-negative, the dependent
sum is log-concave; the converse is not claimed, so a failing partial sum
yields "no verdict" rather than "not log-concave".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Optional

from .seq_core import ExactSeq, LcReport, as_fraction, has_internal_zero, is_log_concave

__all__ = [
    "Kernel",
    "AMatrix",
    "Condition1Report",
    "MainTheoremVerdict",
    "tabular_kernel",
    "rule_kernel",
    "independent_kernel",
    "geometric_joint_kernel",
    "stirling2_kernel",
    "eulerian_kernel",
    "kernel_from_json",
    "kernel_from_spec",
    "dependent_sum",
    "a_entry",
    "a_matrix",
    "a_matrix_discriminant_adjusted",
    "diagonal_increments",
    "check_condition1",
    "verify_main_theorem",
]

ZERO = Fraction(0)


@dataclass(frozen=True)
class Kernel:
    """Non-negative coefficient array ``K(w | v)``, zero-extended.

    ``v_max`` bounds the domain of ``v`` (``None`` for unbounded) and
    ``w_bound`` the largest ``w`` with non-zero mass for any ``v``; a kernel
    without ``w_bound`` cannot be summed against a base sequence.
    """

    kind: str
    rule: Callable[[int, int], Fraction] = field(compare=False, repr=False)
    v_max: Optional[int] = None
    w_bound: Optional[int] = None
    params: Mapping = field(default_factory=dict, compare=False)

    def __call__(self, w: int, v: int) -> Fraction:
        if w < 0 or v < 0:
            return ZERO
        if self.v_max is not None and v > self.v_max:
            return ZERO
        if self.w_bound is not None and w > self.w_bound:
            return ZERO
        val = self.rule(w, v)
        if val < 0:
            raise ValueError(f"kernel {self.kind} is negative at w={w}, v={v}: {val}")
        return val

    def row(self, v: int) -> ExactSeq:
        if self.w_bound is None:
            raise ValueError(f"kernel {self.kind} has no w bound")
        return ExactSeq(self(w, v) for w in range(self.w_bound + 1))

    def to_json(self) -> dict:
        if self.kind == "tabular":
            rows = self.params["rows"]
            return {"kind": "tabular", "rows": {str(v): rows[v].to_json() for v in sorted(rows)}}
        if self.kind == "independent":
            return {"kind": "independent", "pW": self.params["pW"].to_json()}
        if self.kind == "eulerian":
            return {"kind": "eulerian", "n": self.params["n"]}
        if self.kind == "geom_joint":
            return {
                "kind": "geom_joint",
                "p": str(self.params["p"]),
                "alpha": str(self.params["alpha"]),
                "horizon": self.params["horizon"],
            }
        if self.kind == "stirling2":
            return {"kind": "stirling2"}
        raise ValueError(f"kernel kind {self.kind!r} has no JSON form")


def tabular_kernel(rows: Mapping[int, ExactSeq]) -> Kernel:
    rows = {int(v): (r if isinstance(r, ExactSeq) else ExactSeq(r)) for v, r in rows.items()}
    if not rows:
        raise ValueError("tabular kernel needs at least one row")
    if min(rows) < 0:
        raise ValueError("kernel rows must be indexed by v >= 0")

    def rule(w, v):
        r = rows.get(v)
        return r[w] if r is not None else ZERO

    return Kernel(
        kind="tabular",
        rule=rule,
        v_max=max(rows),
        w_bound=max(len(r) for r in rows.values()) - 1,
        params={"rows": rows},
    )


def rule_kernel(func: Callable[[int, int], object], *, v_max=None, w_bound=None, name="rule") -> Kernel:
    """Wrap an arbitrary ``func(w, v)``; values are coerced to Fractions."""
    return Kernel(kind=name, rule=lambda w, v: as_fraction(func(w, v)), v_max=v_max, w_bound=w_bound)


def independent_kernel(pW: ExactSeq) -> Kernel:
    """``K(w | v) = pW[w]`` for every ``v``; the dependent sum is a convolution."""
    return Kernel(kind="independent", rule=lambda w, v: pW[w], w_bound=len(pW) - 1, params={"pW": pW})


def stirling2_kernel() -> Kernel:
    """``K(0|j) = j``, ``K(1|j) = 1``: maps row ``n-1`` of S_2 onto row ``n``."""

    def rule(w, v):
        if w == 0:
            return Fraction(v)
        if w == 1:
            return Fraction(1)
        return ZERO

    return Kernel(kind="stirling2", rule=rule, w_bound=1)


def eulerian_kernel(n: int) -> Kernel:
    """``K(0|j) = j+1``, ``K(1|j) = n-j`` on ``0 <= j <= n``.

    With this parametrisation the dependent sum of ``eulerian_row(n)`` is
    ``eulerian_row(n + 1)``.
    """
    if n < 1:
        raise ValueError(f"eulerian kernel needs n >= 1, got {n}")

    def rule(w, v):
        if w == 0:
            return Fraction(v + 1)
        if w == 1:
            return Fraction(n - v)
        return ZERO

    return Kernel(kind="eulerian", rule=rule, v_max=n, w_bound=1, params={"n": n})


def geometric_joint_kernel(p, alpha, horizon: int) -> Kernel:
    """Negative-binomial conditionals of a dependent geometric pair.

    ``K(j | i) = C(i+j, i) (1 - p + alpha p)^(i+1) (p (1 - alpha))^j``, cut to
    zero for ``i`` or ``j`` beyond ``horizon``. Paired with
    ``V ~ Geom(alpha p / (alpha p + 1 - p))`` the sum ``V + W`` is exactly
    ``Geom(p)``.
    """
    p = as_fraction(p)
    alpha = as_fraction(alpha)
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if not (0 < alpha < 1):
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    keep = 1 - p + alpha * p
    step = p * (1 - alpha)

    def rule(w, v):
        return comb(v + w, v) * keep ** (v + 1) * step ** w

    return Kernel(
        kind="geom_joint",
        rule=rule,
        v_max=horizon,
        w_bound=horizon,
        params={"p": p, "alpha": alpha, "horizon": horizon},
    )


def kernel_from_json(data: Mapping) -> Kernel:
    if not isinstance(data, Mapping) or "kind" not in data:
        raise ValueError("kernel JSON must be an object with a 'kind' field")
    kind = data["kind"]
    if kind == "tabular":
        rows = data.get("rows")
        if not isinstance(rows, Mapping):
            raise ValueError("tabular kernel needs a 'rows' object")
        return tabular_kernel({int(v): ExactSeq.from_json(r) for v, r in rows.items()})
    if kind == "stirling2":
        return stirling2_kernel()
    if kind == "eulerian":
        return eulerian_kernel(int(data["n"]))
    if kind == "geom_joint":
        return geometric_joint_kernel(data["p"], data["alpha"], int(data["horizon"]))
    if kind == "independent":
        return independent_kernel(ExactSeq.from_json(data["pW"]))
    raise ValueError(f"unknown kernel kind {kind!r}")


def kernel_from_spec(spec: str, pW: Optional[ExactSeq] = None) -> Kernel:
    """Short command-line forms: ``stirling2``, ``eulerian:N``,
    ``geom_joint:P,ALPHA,H``, ``independent`` (with ``pW``)."""
    name, _, arg = spec.strip().partition(":")
    if name == "stirling2" and not arg:
        return stirling2_kernel()
    if name == "eulerian":
        return eulerian_kernel(int(arg))
    if name in ("geom_joint", "geom-joint"):
        parts = arg.split(",")
        if len(parts) != 3:
            raise ValueError("geom_joint needs P,ALPHA,HORIZON")
        return geometric_joint_kernel(parts[0], parts[1], int(parts[2]))
    if name == "independent":
        if arg:
            pW = ExactSeq.parse(arg)
        if pW is None:
            raise ValueError("independent kernel needs pW")
        return independent_kernel(pW)
    raise ValueError(f"unknown kernel spec {spec!r}")


def dependent_sum(pV: ExactSeq, K: Kernel) -> ExactSeq:
    if K.w_bound is None:
        raise ValueError(f"kernel {K.kind} has no truncation bound; cannot form the sum")
    lo, hi = pV.support()
    if K.v_max is not None and pV[hi] and hi > K.v_max:
        raise ValueError(f"base sequence has mass at v={hi}, outside the kernel domain 0..{K.v_max}")
    out = [ZERO] * (len(pV) + K.w_bound)
    for v, mass in enumerate(pV.values):
        if not mass:
            continue
        for w in range(K.w_bound + 1):
            kv = K(w, v)
            if kv:
                out[v + w] += mass * kv
    return ExactSeq(out)


def a_entry(K: Kernel, i: int, r: int, s: int) -> Fraction:
    return K(i - r, r) * K(i - s, s) - K(i - r - 1, r) * K(i - s + 1, s)


def _discriminant_shift(i: int, r: int, s: int) -> int:
    # Coefficients of -(x_{i-1} - x_i)^2 as a quadratic form in (x_r, x_s).
    if (r, s) in ((i - 1, i - 1), (i, i)):
        return -1
    if (r, s) in ((i - 1, i), (i, i - 1)):
        return 1
    return 0


@dataclass(frozen=True)
class AMatrix:
    i: int
    entries: Mapping[tuple[int, int], Fraction]
    adjusted: bool = False

    def __getitem__(self, rs: tuple[int, int]) -> Fraction:
        return self.entries[rs]

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "adjusted": self.adjusted,
            "entries": {f"{r},{s}": str(v) for (r, s), v in sorted(self.entries.items())},
        }


def a_matrix(K: Kernel, i: int, r_max: int, s_max: int) -> AMatrix:
    entries = {
        (r, s): a_entry(K, i, r, s) for r in range(r_max + 1) for s in range(s_max + 1)
    }
    return AMatrix(i=i, entries=entries)


def a_matrix_discriminant_adjusted(K: Kernel, i: int, r_max: Optional[int] = None,
                                   s_max: Optional[int] = None) -> AMatrix:
    """Coefficients after subtracting ``(pV[i-1] - pV[i])**2``.

    Subtracting a square keeps the quadratic form's sign argument valid
    while moving mass onto the ``(i-1, i)`` cross terms, which is what lets
    the Eulerian kernel pass the partial-sum test.
    """
    if i < 1:
        raise ValueError(f"adjustment needs i >= 1, got {i}")
    r_max = i + 1 if r_max is None else r_max
    s_max = i + 1 if s_max is None else s_max
    entries = {
        (r, s): a_entry(K, i, r, s) + _discriminant_shift(i, r, s)
        for r in range(r_max + 1)
        for s in range(s_max + 1)
    }
    return AMatrix(i=i, entries=entries, adjusted=True)


def _a_source(K: Kernel, i: int, adjusted: bool):
    cache: dict[tuple[int, int], Fraction] = {}
    shift = adjusted and i >= 1

    def a(r, s):
        key = (r, s)
        if key not in cache:
            val = a_entry(K, i, r, s)
            if shift:
                val += _discriminant_shift(i, r, s)
            cache[key] = val
        return cache[key]

    return a


def diagonal_increments(K: Kernel, i: int, m: int, adjusted: bool = False):
    """Increments ``c_k`` and ``d_k`` (``0 <= k <= m``) along anti-diagonals.

    ``c_0 = a(m, m)``, ``c_k = a(m+k, m-k) + a(m-k, m+k)``;
    ``d_k = a(m+k+1, m-k) + a(m-k, m+k+1)``. Their prefix sums are the part
    (a) and part (b) partial sums.
    """
    a = _a_source(K, i, adjusted)
    c = [a(m, m)] + [a(m + k, m - k) + a(m - k, m + k) for k in range(1, m + 1)]
    d = [a(m + k + 1, m - k) + a(m - k, m + k + 1) for k in range(m + 1)]
    return tuple(c), tuple(d)


@dataclass(frozen=True)
class Condition1Report:
    """Every diagonal partial sum for ``0 <= t <= m <= i <= i_max``.

    ``sums_a[i, m, t] = sum_{k=-t..t} a_i(m+k, m-k)``
    ``sums_b[i, m, t] = sum_{k=-t-1..t} a_i(m+k+1, m-k)``
    ``sums_b_centered[i, m, t] = sum_{k=-t..t} a_i(m+k+1, m-k)``

    Only ``sums_a`` and ``sums_b`` enter the verdict. The centred variant
    interleaves with ``sums_b`` (it adds the ``k = t`` term before the
    ``k = -t-1`` one) and is kept because hand tabulations are often written
    in that order.
    """

    i_max: int
    adjusted: bool
    sums_a: Mapping[tuple[int, int, int], Fraction]
    sums_b: Mapping[tuple[int, int, int], Fraction]
    sums_b_centered: Mapping[tuple[int, int, int], Fraction]
    failures: tuple[tuple[int, int, int, str], ...]

    @property
    def holds_a(self) -> bool:
        return not any(f[3] == "a" for f in self.failures)

    @property
    def holds_b(self) -> bool:
        return not any(f[3] == "b" for f in self.failures)

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[tuple[int, int, int, str]]:
        return self.failures[0] if self.failures else None

    def sequence_a(self, i: int, m: int) -> tuple[Fraction, ...]:
        return tuple(self.sums_a[i, m, t] for t in range(m + 1))

    def sequence_b(self, i: int, m: int) -> tuple[Fraction, ...]:
        return tuple(self.sums_b[i, m, t] for t in range(m + 1))

    def sequence_b_centered(self, i: int, m: int) -> tuple[Fraction, ...]:
        return tuple(self.sums_b_centered[i, m, t] for t in range(m + 1))

    def failure_value(self, failure: tuple[int, int, int, str]) -> Fraction:
        i, m, t, part = failure
        return (self.sums_a if part == "a" else self.sums_b)[i, m, t]

    def to_json(self) -> dict:
        def dump(d):
            return {f"{i},{m},{t}": str(v) for (i, m, t), v in sorted(d.items())}

        first = self.first_failure
        return {
            "i_max": self.i_max,
            "adjusted": self.adjusted,
            "holds_a": self.holds_a,
            "holds_b": self.holds_b,
            "first_failure": None if first is None else {
                "i": first[0], "m": first[1], "t": first[2], "part": first[3],
                "value": str(self.failure_value(first)),
            },
            "sums_a": dump(self.sums_a),
            "sums_b": dump(self.sums_b),
            "sums_b_centered": dump(self.sums_b_centered),
        }


def check_condition1(K: Kernel, i_max: int, adjusted: bool = False) -> Condition1Report:
    """Exhaustively evaluate the part (a) and (b) partial sums up to ``i_max``.

    With ``adjusted=True`` the coefficients of
    :func:`a_matrix_discriminant_adjusted` are used for every ``i >= 1``
    (the adjustment is undefined at ``i = 0``, which keeps the raw entries).
    """
    if i_max < 0:
        raise ValueError(f"i_max must be >= 0, got {i_max}")
    sums_a, sums_b, sums_c = {}, {}, {}
    failures = []
    for i in range(i_max + 1):
        a = _a_source(K, i, adjusted)
        for m in range(i + 1):
            sa = a(m, m)
            sb = a(m, m + 1) + a(m + 1, m)
            sc = a(m + 1, m)
            for t in range(m + 1):
                if t > 0:
                    sa += a(m + t, m - t) + a(m - t, m + t)
                    sb += a(m + t + 1, m - t) + a(m - t, m + t + 1)
                    sc += a(m + t + 1, m - t) + a(m - t + 1, m + t)
                sums_a[i, m, t] = sa
                sums_b[i, m, t] = sb
                sums_c[i, m, t] = sc
                if sa < 0:
                    failures.append((i, m, t, "a"))
                if sb < 0:
                    failures.append((i, m, t, "b"))
    return Condition1Report(
        i_max=i_max,
        adjusted=adjusted,
        sums_a=sums_a,
        sums_b=sums_b,
        sums_b_centered=sums_c,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class MainTheoremVerdict:
    condition1: Condition1Report
    total: ExactSeq
    lc: LcReport
    decomposition: tuple[tuple[int, Fraction, Fraction], ...]
    i_max: int

    @property
    def decomposition_ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.decomposition)

    @property
    def window_deficits(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple((i, d) for i, d in self.lc.deficits if i <= self.i_max)

    @property
    def concluded_lc(self) -> Optional[bool]:
        """``True`` when the partial sums certify the window; ``None`` otherwise."""
        return True if self.condition1.holds else None

    @property
    def violations(self) -> tuple[int, ...]:
        """Indices contradicting the certificate (always empty if the theory is right)."""
        if not self.condition1.holds:
            return ()
        return tuple(i for i, d in self.window_deficits if d < 0)

    @property
    def ok(self) -> bool:
        return self.decomposition_ok and not self.violations


def verify_main_theorem(pV: ExactSeq, K: Kernel, i_max: int) -> MainTheoremVerdict:
    """Check the partial sums, the dependent sum's deficits and the quadratic
    form identity ``deficit(i) = sum_{j<=i, k<=i+1} pV[j] pV[k] a_i(j, k)``.

    ``pV`` must be log-concave with no internal zeros.
    """
    rep = is_log_concave(pV)
    if not rep.is_lc:
        raise ValueError(f"base sequence is not log-concave (index {rep.first_violation})")
    if has_internal_zero(pV):
        raise ValueError("base sequence has an internal zero; log-concavity alone is not enough")
    total = dependent_sum(pV, K)
    lc = is_log_concave(total)
    cond = check_condition1(K, i_max)
    rows = []
    for i in range(i_max + 1):
        lhs = total[i] * total[i] - total[i - 1] * total[i + 1]
        rhs = ZERO
        for j in range(i + 1):
            if not pV[j]:
                continue
            for k in range(i + 2):
                if pV[k]:
                    rhs += pV[j] * pV[k] * a_entry(K, i, j, k)
        rows.append((i, lhs, rhs))
    return MainTheoremVerdict(condition1=cond, total=total, lc=lc, decomposition=tuple(rows), i_max=i_max)
