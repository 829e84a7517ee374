"""
Sums of dependent variables through a kernel.

The row n+1 of a triangle is the dependent sum of row n against a small
kernel. The diagonal partial sums of the coefficient array decide whether
log-concavity is passed on.
"""
from lcprop import (
    ExactSeq,
    check_condition1,
    dependent_sum,
    eulerian_kernel,
    eulerian_row,
    independent_kernel,
    is_log_concave,
    stirling2_kernel,
    stirling2_row,
    verify_main_theorem,
)
from lcprop.kernel import a_matrix

K = stirling2_kernel()
row = stirling2_row(5).row
print("S2(5, .) =", row.to_json())
print("stepped  =", dependent_sum(row, K).to_json())
print("S2(6, .) =", stirling2_row(6).row.to_json())

A = a_matrix(K, 3, 4, 4)
print("\ncoefficients a_3(r, s), r down, s across:")
for r in range(5):
    print("  ", " ".join(f"{str(A[r, s]):>3}" for s in range(5)))

rep = check_condition1(K, 6)
print("partial sums non-negative up to i = 6:", rep.holds)


def show(xs):
    return "(" + ", ".join(str(x) for x in xs) + ")"


for i in range(1, 5):
    print(f"  i={i}: m=i {show(rep.sequence_a(i, i))}  m=i-1 {show(rep.sequence_a(i, i - 1))}"
          f"  part b {show(rep.sequence_b(i, i - 1))}")

# the Eulerian kernel fails the test but the rows are still log-concave;
# subtracting a square rescues the argument
E = eulerian_kernel(7)
raw = check_condition1(E, 5)
adj = check_condition1(E, 5, adjusted=True)
print("\neulerian n=7: raw holds", raw.holds, "first failure", raw.first_failure)
print("eulerian n=7: adjusted holds", adj.holds)
print("E(8, .) =", dependent_sum(eulerian_row(7).row, E).to_json(),
      "LC:", is_log_concave(eulerian_row(8).row).is_lc)

# independent case: the quadratic-form decomposition is exact
pV, pW = ExactSeq([1, 2, 2, 1]), ExactSeq([3, 2])
v = verify_main_theorem(pV, independent_kernel(pW), 6)
print("\nindependent pair: decomposition exact", v.decomposition_ok, "sum LC", v.lc.is_lc)
