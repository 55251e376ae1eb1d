"""
Closed balls in Z/27
====================

Two balls either nest or miss each other, any member can serve as the
center, and a chain of balls shrinks onto a residue class.
"""
from collections import Counter
from itertools import combinations

from nonarch import Ball, FiniteModel, ball_relation, chain_intersection
from nonarch.balls import balls
from nonarch.valuation import NormValue

m = FiniteModel(3, 3)
big, small = Ball(m, 0, NormValue(3, -1)), Ball(m, 3, NormValue(3, -1))
print(big, "vs", small, ":", ball_relation(big, small).value)

chain = [Ball(m, 0, NormValue(3, -e)) for e in range(3)]
print("chain intersection:", chain_intersection(chain))

tally = Counter(ball_relation(a, b).name for a, b in combinations(balls(m), 2))
print("relations over all ball pairs:", dict(tally))
