"""
A first look at log-concavity with exact fractions.

A mass function can fail to be log-concave, yet adding an independent
geometric variable repairs it once the geometric parameter is large enough.
"""
from fractions import Fraction as F

from lcprop import ExactSeq, convolve, geom_sum_analyze, is_log_concave, min_lc_geom_param

w = ExactSeq([F(5, 8), F(1, 4), F(1, 8)])
rep = is_log_concave(w)
print("pW =", w.to_json())
for i, d in rep.deficits:
    print(f"  deficit at {i}: {d}")
print("log-concave:", rep.is_lc)

# two log-concave laws always convolve to a log-concave law
a = ExactSeq([1, 3, 3, 1])
b = ExactSeq([2, 3, 1])
print("\n(1,3,3,1) * (2,3,1) =", convolve(a, b).to_json(), is_log_concave(convolve(a, b)).is_lc)

# but gaps in the support break this
gappy = ExactSeq([1, 0, 0, 1])
print("(1,0,0,1) passes the pointwise test:", is_log_concave(gappy).is_lc)
print("(1,0,0,1) * (1,1) is log-concave:", is_log_concave(convolve(gappy, ExactSeq([1, 1]))).is_lc)

print("\npW + Geom(p):")
for p in (F(1, 20), F(1, 10), F(1, 2)):
    an = geom_sum_analyze(w, p)
    print(f"  p = {p}: log-concave {an.is_lc}, criterion {[str(v) for _, v in an.criterion_values]}")

iv = min_lc_geom_param(w, 4096)
print(f"least repairing p lies in [{iv.lo}, {iv.hi}]")
