from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lcprop import (
    ExactPoly,
    ExactSeq,
    all_roots_real_negative,
    binomial_row,
    inversion_numbers,
    realroots_implies_lc_check,
    stirling1_row,
    sturm_real_root_count,
)
from lcprop.polyroots import factor_out_x, real_root_count_with_multiplicity, sturm_sequence
from conftest import lc_seqs, seqs


def _product(factors):
    p = ExactPoly([1])
    for f in factors:
        p = p * ExactPoly(f)
    return p


roots = st.dictionaries(st.integers(-10, 10), st.integers(1, 3), max_size=4)
# x^2 + b x + c with b^2 < 4c has no real roots
complex_pairs = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(1, 20)).filter(lambda bc: bc[0] ** 2 < 4 * bc[1]),
    max_size=2,
)


@given(roots, complex_pairs, st.integers(1, 5))
def test_counts_on_constructed_polynomials(rs, pairs, lead):
    factors = [[-r, 1] for r, k in rs.items() for _ in range(k)] + [[c, b, 1] for b, c in pairs]
    p = _product(factors) * ExactPoly([lead])
    assert sturm_real_root_count(p) == len(rs)
    assert real_root_count_with_multiplicity(p) == sum(rs.values())
    assert sturm_real_root_count(p, -3, 4) == sum(1 for r in rs if -3 < r <= 4)
    assert real_root_count_with_multiplicity(p, None, 0) == sum(k for r, k in rs.items() if r <= 0)


def _grid_sign_changes(p, lo, hi, steps):
    xs = [lo + (hi - lo) * F(j, steps) for j in range(steps + 1)]
    vals = [p(x) for x in xs]
    # strict changes between neighbours plus exact hits, so no root is counted twice
    return sum(1 for a, b in zip(vals, vals[1:]) if a * b < 0) + vals.count(0)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_sturm_dominates_grid_oracle(coeffs):
    # sign changes on a grid are a lower bound on the distinct roots in range
    p = ExactPoly(coeffs)
    bound = 1 + max(abs(F(c, coeffs[-1])) for c in coeffs[:-1])
    lo, hi = -bound - F(1, 7), bound
    assert sturm_real_root_count(p, lo, hi) == sturm_real_root_count(p)
    assert _grid_sign_changes(p, lo, hi, 400) <= sturm_real_root_count(p)


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6, unique=True), st.integers(1, 4))
def test_numpy_cross_check(rs, lead):
    # well separated integer roots: float root finding is reliable here
    p = _product([[-r, 1] for r in rs]) * ExactPoly([lead])
    found = np.roots([float(c) for c in reversed(p.coeffs)])
    n_real = int(np.sum(np.abs(found.imag) < 1e-6))
    assert n_real == sturm_real_root_count(p) == len(rs)


def test_sturm_sequence_shape():
    chain = sturm_sequence(ExactPoly([-2, 0, 1]))
    assert chain[0] == ExactPoly([-2, 0, 1]) and chain[-1].degree == 0
    with pytest.raises(ValueError):
        sturm_sequence(ExactPoly([0]))


def test_bounds_validation():
    p = ExactPoly([-1, 0, 1])
    assert sturm_real_root_count(p, 1, 2) == 0  # interval excludes its left end
    assert sturm_real_root_count(p, F(1, 2), 1) == 1
    with pytest.raises(ValueError):
        sturm_real_root_count(p, 2, 1)
    with pytest.raises(TypeError):
        sturm_real_root_count(p, 0.5, 1)


@pytest.mark.parametrize("n", range(0, 16))
def test_binomial_real_negative(n):
    assert all_roots_real_negative(ExactPoly(binomial_row(n).row.values))


@pytest.mark.parametrize("n", range(1, 13))
def test_stirling1_real_negative_after_x(n):
    k, core = factor_out_x(ExactPoly(stirling1_row(n).row.values))
    assert k == 1 and all_roots_real_negative(core)
    assert not all_roots_real_negative(ExactPoly(stirling1_row(n).row.values))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_inversion_polynomials_have_complex_roots(n):
    p = ExactPoly(inversion_numbers(n).row.values)
    assert not all_roots_real_negative(p)
    assert realroots_implies_lc_check(inversion_numbers(n).row).is_lc


def test_real_negative_edge_cases():
    assert all_roots_real_negative(ExactPoly([3]))
    assert all_roots_real_negative(ExactPoly([1, 2, 1]))  # double root at -1
    assert not all_roots_real_negative(ExactPoly([1, 0, 1]))
    with pytest.raises(ValueError):
        all_roots_real_negative(ExactPoly([1, -1]))
    with pytest.raises(ValueError):
        all_roots_real_negative(ExactPoly([0]))


@given(seqs.filter(lambda s: not s.is_zero()))
def test_real_roots_imply_lc(s):
    assert realroots_implies_lc_check(s).holds


@given(st.lists(st.integers(1, 9), max_size=6), st.integers(0, 2))
def test_negative_rooted_products_are_lc(rs, shift):
    p = _product([[r, 1] for r in rs])
    s = ExactSeq([0] * shift + list(p.coeffs))
    v = realroots_implies_lc_check(s)
    assert v.real_negative and v.is_lc and v.zero_roots == shift


def test_poly_arithmetic():
    p = ExactPoly([1, 2, 1])
    q, r = p.divmod(ExactPoly([1, 1]))
    assert q == ExactPoly([1, 1]) and r.is_zero()
    assert p.derivative() == ExactPoly([2, 2])
    assert ExactPoly([F(1, 2), F(3, 4)]).primitive() == ExactPoly([2, 3])
    assert p(F(-1)) == 0 and ExactPoly([0]).degree == -1
    assert ExactPoly.from_json(p.to_json()) == p
    with pytest.raises(ZeroDivisionError):
        p.divmod(ExactPoly([0]))
