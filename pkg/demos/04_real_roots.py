"""
Real-rootedness as a route to log-concavity.

Sturm sequences count real roots exactly. Binomial and Stirling-1
polynomials have only real negative roots; inversion polynomials do not,
yet their coefficients are still log-concave.
"""
from lcprop import ExactPoly, binomial_row, inversion_numbers, realroots_implies_lc_check, stirling1_row
from lcprop.polyroots import real_root_count_with_multiplicity, sturm_real_root_count

for name, row in [("binomial(6)", binomial_row(6)), ("stirling1(6)", stirling1_row(6)),
                  ("inversions(4)", inversion_numbers(4))]:
    p = ExactPoly(row.row.values)
    v = realroots_implies_lc_check(row.row)
    print(f"{name:14} degree {p.degree:2}  distinct real {sturm_real_root_count(p):2}  "
          f"with multiplicity {real_root_count_with_multiplicity(p):2}  "
          f"zero roots {v.zero_roots}  real-negative {v.real_negative}  LC {v.is_lc}")

# (x+1)^3 (x^2+1): one distinct real root, three with multiplicity
p = ExactPoly([1, 3, 3, 1]) * ExactPoly([1, 0, 1])
print("\n(x+1)^3 (x^2+1):", sturm_real_root_count(p), real_root_count_with_multiplicity(p))
