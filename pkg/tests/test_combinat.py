from fractions import Fraction as F
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from lcprop import (
    ExactSeq,
    TriangleRow,
    bell_number,
    bernoulli_sum,
    binomial_row,
    eulerian_row,
    inversion_numbers,
    is_log_concave,
    q_stirling2_row,
    stirling1_row,
    stirling2_row,
)
from lcprop.combinat import triangle_row


def _cycles(perm):
    seen, count = set(), 0
    for s in range(len(perm)):
        if s not in seen:
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    return count


def _brute(n, stat):
    counts = {}
    for perm in permutations(range(n)):
        k = stat(perm)
        counts[k] = counts.get(k, 0) + 1
    return ExactSeq(counts.get(k, 0) for k in range(max(counts) + 1))


def ascents(p):
    return sum(p[j] < p[j + 1] for j in range(len(p) - 1))


def inversions(p):
    return sum(p[a] > p[b] for a in range(len(p)) for b in range(a + 1, len(p)))


def test_known_rows():
    assert stirling2_row(5).row.values == (0, 1, 15, 25, 10, 1)
    assert stirling1_row(4).row.values == (0, 6, 11, 6, 1)
    assert eulerian_row(4).row.values == (1, 11, 11, 1)
    assert inversion_numbers(4).row.values == (1, 3, 5, 6, 5, 3, 1)
    assert binomial_row(0).row.values == (1,)


@pytest.mark.parametrize("n", range(1, 8))
def test_permutation_statistics(n):
    assert eulerian_row(n).row == _brute(n, ascents)
    assert inversion_numbers(n).row == _brute(n, inversions)
    cyc = _brute(n, _cycles)
    assert stirling1_row(n).row == cyc


@pytest.mark.parametrize("n", range(1, 12))
def test_stirling2_inclusion_exclusion(n):
    want = [sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)
            for k in range(n + 1)]
    assert stirling2_row(n).row == ExactSeq(want)


@pytest.mark.parametrize("n", range(1, 15))
def test_row_sums(n):
    assert stirling2_row(n).row.total() == bell_number(n)
    assert stirling1_row(n).row.total() == factorial(n)
    assert eulerian_row(n).row.total() == factorial(n)
    assert inversion_numbers(n).row.total() == factorial(n)


def test_bell_numbers():
    assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(1, 13))
def test_symmetry(n):
    e = eulerian_row(n).row.values
    assert e == e[::-1]
    b = inversion_numbers(n).row.values
    assert b == b[::-1] and len(b) == n * (n - 1) // 2 + 1


@pytest.mark.parametrize("n", range(1, 11))
def test_stirling1_is_scaled_bernoulli_sum(n):
    pmf = bernoulli_sum([F(1, i) for i in range(1, n + 1)])
    assert stirling1_row(n).row == pmf.scale(factorial(n))


@pytest.mark.parametrize("family", ["binomial", "stirling1", "stirling2", "eulerian", "inversions"])
@pytest.mark.parametrize("n", range(1, 16))
def test_rows_log_concave(family, n):
    assert is_log_concave(triangle_row(family, n).row).is_lc


def _q_series_column(k, q, n_max):
    """Coefficients of x^k q^C(k,2) / prod_{j<=k} (1 - [j]_q x) up to x^n_max."""
    coeffs = [F(0)] * (n_max + 1)
    if k <= n_max:
        coeffs[k] = q ** comb(k, 2)
    for j in range(1, k + 1):
        qj = sum(q ** e for e in range(j))
        # multiply by 1 / (1 - qj x)
        for n in range(1, n_max + 1):
            coeffs[n] += qj * coeffs[n - 1]
    return coeffs


@pytest.mark.parametrize("q", [F(0), F(1, 4), F(1, 2), F(3, 4), F(1), F(2)])
def test_q_stirling_generating_function(q):
    n_max = 9
    cols = [_q_series_column(k, q, n_max) for k in range(n_max + 1)]
    for n in range(1, n_max + 1):
        assert q_stirling2_row(n, q).row == ExactSeq(cols[k][n] for k in range(n + 1))


@given(st.fractions(min_value=F(1, 10), max_value=3, max_denominator=10), st.integers(1, 8))
def test_q_weight_relation(q, n):
    # dropping the q^(k-1) weight from the recurrence divides column k by q^C(k,2)
    row = [F(1)]
    for _ in range(n):
        row = [(row[k - 1] if k else 0) + (sum(q ** e for e in range(k)) * row[k] if k < len(row) else 0)
               for k in range(len(row) + 1)]
    weighted = q_stirling2_row(n, q).row
    assert all(weighted[k] == q ** comb(k, 2) * row[k] for k in range(n + 1))


def test_q_stirling_special_values():
    for n in range(1, 10):
        assert q_stirling2_row(n, 1).row == stirling2_row(n).row
    # only k <= 1 survives at q = 0 under the weighted recurrence
    assert q_stirling2_row(4, 0).row.values == (0, 1)
    with pytest.raises(ValueError):
        q_stirling2_row(3, -1)


@pytest.mark.parametrize("q", [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)])
@pytest.mark.parametrize("n", range(1, 16))
def test_q_stirling_log_concave(q, n):
    assert is_log_concave(q_stirling2_row(n, q).row).is_lc


@pytest.mark.parametrize("bad", [0, -1, 1.0])
def test_bad_n(bad):
    with pytest.raises(ValueError):
        stirling2_row(bad)


def test_bernoulli_sum_validation():
    with pytest.raises(ValueError):
        bernoulli_sum([F(3, 2)])
    assert bernoulli_sum([]) == ExactSeq([1])


def test_row_json_round_trip():
    for row in (stirling2_row(6), q_stirling2_row(5, F(1, 3)), inversion_numbers(5)):
        assert TriangleRow.from_json(row.to_json()) == row
    with pytest.raises(ValueError):
        TriangleRow.from_json({"family": "catalan", "n": 3, "row": ["1"]})
