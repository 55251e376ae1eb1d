"""
Truncated p-adic arithmetic
===========================

Elements of Q_p carried to a fixed number of digits, with the
precision of every result tracked explicitly.
"""
from fractions import Fraction

from nonarch import from_rational

x = from_rational(Fraction(1, 3), 2, 4)
print(x, "  unit", x.unit, "since 3 * 11 = 33 = 1 mod 16")
print(from_rational(171, 3, 4).render())

# -1 is the 3-adic number 2 + 2*3 + 2*9 + ...
print(from_rational(-1, 3, 6).render())

# cancellation costs relative precision; the result knows it
a = from_rational(Fraction(7, 5), 3, 8)
b = from_rational(Fraction(7, 5) + 3**5, 3, 8)
d = b - a
print("difference:", d, " absolute precision", d.abs_prec)

# everything agrees with exact rationals up to that precision
u, w = Fraction(-5, 12), Fraction(49, 10)
for op in ("__add__", "__mul__", "__truediv__"):
    got = getattr(from_rational(u, 5, 10), op)(from_rational(w, 5, 10))
    want = from_rational(getattr(u, op)(w), 5, 10)
    print(op.strip("_"), got, "==", want, got == want)
