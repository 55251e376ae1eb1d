"""
Valuations and absolute values
==============================

Exact p-adic valuations of rationals, the trivial valuation, and the
strong triangle inequality checked on a seeded sample.
"""
from fractions import Fraction
import random

from nonarch import absolute, check_field_axioms, padic_val, sharp_triangle
from nonarch.spaces import random_rational

# 12 = 2^2 * 3, so it is small 2-adically and 3-adically
for p in (2, 3, 5):
    print(f"v_{p}(12) = {padic_val(12, p)}, |12|_{p} = {absolute(12, p)}")

# denominators push the norm up
print("|1/8|_2 =", absolute(Fraction(1, 8), 2))
print("|0|_3 =", absolute(0, 3), " v_3(0) =", padic_val(0, 3))
print("trivial: |7/2| =", absolute(Fraction(7, 2), "trivial"))

rng = random.Random(0)
sample = [random_rational(rng, 1000) for _ in range(100)]
for base in (2, 3, "trivial"):
    print(f"axioms for {base}:", check_field_axioms(base, sample).summary())

# with |a| != |b| the triangle inequality is an equality
a, b = Fraction(4), Fraction(3, 2)
print(f"|{a} - {b}|_2 =", sharp_triangle(a, b, 2), "= max", absolute(a, 2), absolute(b, 2))
