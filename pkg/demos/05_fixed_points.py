"""
Contractions, Hensel inversion and the equation f(u) + f(v) = f((u+v)/k)
========================================================================

Iteration of maps with ||h(x) - h(y)|| < ||x - y|| converges, and the
iterator checks that every step really shrinks the residual.
"""
from fractions import Fraction

from nonarch import Affine, HenselPerturb, QpVector, invert_isometry, iterate_contraction, proposition_v
from nonarch.errors import ContractViolation

q = QpVector(3, 16)

res = iterate_contraction(Affine(3, 1), q, q.point(0), 12)
print("fixed point of 3x + 1:", q.format(res.v), "after", res.iterations, "steps")
# the closed form c/(1-a) = -1/2; they agree to the 12 digits asked for
print("distance to -1/2:", q.dist(res.v, q.point(Fraction(-1, 2))))

try:
    iterate_contraction(lambda x: x, q, q.point(2), 10)
except ContractViolation as exc:
    print("identity:", exc)

# f(x) = x + 3x^2 is an isometry of Z_3; invert it at f(2) = 14
f = HenselPerturb(3, (0, 0, 1))
inv = invert_isometry(f, q, q.point(14))
print("f^-1(14) =", q.format(inv.v), " verified:", inv.verified)

r = proposition_v(f, q, 1, 3)
print("v =", q.format(r.v))
print("residual exponents:", [-x.exp for x in r.residuals])
print("identity holds:", r.verified, " starts 0 and 5 agree:", r.starts_agreed)
