"""
X + Geom(p): monotonicity in p and the mixing identity.

If the sum is log-concave at p1 it stays so at every p2 >= p1, because the
law at p2 is a positive mixture of shifts of the law at p1.
"""
import random
from fractions import Fraction as F

from lcprop import ExactSeq, gap_detect, geom_sum_analyze, mix_coefficients, verify_order
from lcprop.geomlab import check_mixing_identity
from lcprop.randgen import random_param, random_pmf

# here the verdict flips exactly at p = 2/3
x = ExactSeq([F(3, 5), F(1, 5), F(1, 5)])
for p in (F(1, 5), F(3, 5), F(2, 3), F(4, 5)):
    print(f"p={p}: LC {geom_sum_analyze(x, p).is_lc}")

mix = mix_coefficients(F(1, 3), F(1, 2), 6)
print("\nmixing weights 1/3 -> 1/2:", [str(b) for b in mix.b])
print("identity holds:", check_mixing_identity(x, mix))

rng = random.Random(0)
violations = 0
for _ in range(200):
    pX = random_pmf(rng)
    p1, p2 = sorted((random_param(rng), random_param(rng)))
    violations += not verify_order(pX, p1, p2).ok
print("random order checks, violations:", violations)

gapped = ExactSeq([F(1, 2), 0, F(1, 2)])
print("\ngap at", gap_detect(gapped), "-> LC for any p?",
      any(geom_sum_analyze(gapped, F(k, 10)).is_lc for k in range(1, 10)))
