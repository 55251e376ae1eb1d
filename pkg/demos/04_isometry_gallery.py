"""
Isometries that are not additive
================================

Two surjective isometries f with f(0) = 0 that fail f(x+y) = f(x) + f(y):
cubing on the trivially valued rationals, and x -> 1/x on units of Q
seen inside Q_2.
"""
from fractions import Fraction

from nonarch import Cube, Q2Inversion, RationalLine, TrivialLine, check_additivity, check_isometry, gallery

t = TrivialLine()
pts = [Fraction(n) for n in range(-3, 4)]
print("cube isometry:", check_isometry(Cube(), t, pts).summary())
print("cube additive:", check_additivity(Cube(), t, pts).summary())

q2 = RationalLine(2)
f = Q2Inversion()
for x in (1, 3, Fraction(1, 3), 4, 12):
    print(f"f({x}) = {f.apply(q2, Fraction(x))}")

# 1 and 3 are both units, but 1 + 3 = 4 is not
x, y = Fraction(1), Fraction(3)
print("f(1+3) =", f.apply(q2, x + y), " f(1)+f(3) =", f.apply(q2, x) + f.apply(q2, y))

for section in gallery():
    print(section.title, "->", section.line())
