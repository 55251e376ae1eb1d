"""
Strict convexity fails, midpoints survive
=========================================

In Z/3^N every pair with ||x|| = ||y|| = ||x + y|| is a witness against
strict convexity.  The midpoint (x+y)/2 still exists because 2 is a
unit, but it is no longer the only point equidistant from x and y.
"""
import random

from nonarch import FiniteModel, QpVector, equidistant_points, midpoint, strict_convexity_witness

for n in (1, 2, 3):
    m = FiniteModel(3, n)
    print(m, "witness:", strict_convexity_witness(m))

m = FiniteModel(3, 3)
pts = equidistant_points(m, 0, 1)
print(f"{len(pts)} points at distance 1 from both 0 and 1; midpoint {midpoint(m, 0, 1)} among them")

# in one digit nothing is left to choose from
print("mod 3:", equidistant_points(FiniteModel(3, 1), 0, 1))

# ||x - (x+y)/2|| = ||x - y|| on random vectors in Q_3^2
q = QpVector(3, 12, 2)
rng = random.Random(3)
x, y = q.random_point(rng), q.random_point(rng)
print("||x - y|| =", q.dist(x, y), " ||x - mid|| =", q.dist(x, midpoint(q, x, y)))
