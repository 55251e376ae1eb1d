"""Closed balls, their inclusion relation and intersections of chains."""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import IncompatibleOperands, InvalidParameter
from .spaces import FiniteModel, TrivialLine
from .valuation import NormValue


class BallRelation(Enum):
    EQUAL = "equal"
    FIRST_IN_SECOND = "nested: first inside second"
    SECOND_IN_FIRST = "nested: second inside first"
    DISJOINT = "disjoint"


def attained_radius(space, radius):
    """Whether ``radius`` is a norm value the space actually attains."""
    if radius.is_zero:
        return True
    if radius.base != space.base:
        return False
    if isinstance(space, FiniteModel):
        return 0 <= -radius.exp < space.N
    if isinstance(space, TrivialLine):
        return radius.exp == 0
    return True


@dataclass(frozen=True)
class Ball:
    """The closed ball {z : ||z - center|| <= radius}."""

    space: object
    center: object
    radius: NormValue

    def __post_init__(self):
        self.space.check(self.center)
        if not attained_radius(self.space, self.radius):
            raise InvalidParameter(f"radius {self.radius} is not a norm value of {self.space}")

    def __contains__(self, z):
        return self.space.dist(self.center, z) <= self.radius

    def members(self):
        return frozenset(z for z in self.space.elements() if z in self)

    def recentered(self, z):
        if z not in self:
            raise InvalidParameter(f"{z} is not in {self}")
        return Ball(self.space, z, self.radius)

    def __str__(self):
        return f"B({self.space.format(self.center)}, {self.radius})"


def balls(space):
    """Every (center, radius) ball of a finite model, radii ascending."""
    radii = [NormValue.zero(space.p)] + [NormValue(space.p, -e) for e in range(space.N - 1, -1, -1)]
    return [Ball(space, c, r) for r in radii for c in space.elements()]


def relation_by_distance(b1, b2):
    """Classify two balls from ||c1 - c2|| and the radii alone."""
    d = b1.space.dist(b1.center, b2.center)
    if d > max(b1.radius, b2.radius):
        return BallRelation.DISJOINT
    if b1.radius == b2.radius:
        return BallRelation.EQUAL
    return BallRelation.FIRST_IN_SECOND if b1.radius < b2.radius else BallRelation.SECOND_IN_FIRST


def relation_by_members(m1, m2):
    if m1 == m2:
        return BallRelation.EQUAL
    if m1 < m2:
        return BallRelation.FIRST_IN_SECOND
    if m2 < m1:
        return BallRelation.SECOND_IN_FIRST
    if not m1 & m2:
        return BallRelation.DISJOINT
    raise ArithmeticError("intersecting balls that are not nested: the space is not ultrametric")


def ball_relation(b1, b2):
    """Nested, equal or disjoint; membership sets decide on finite models."""
    if b1.space != b2.space:
        raise IncompatibleOperands(f"balls live in {b1.space} and {b2.space}")
    if b1.space.finite:
        return relation_by_members(b1.members(), b2.members())
    return relation_by_distance(b1, b2)


def chain_intersection(chain):
    """Exact intersection of balls totally ordered by inclusion.

    Raises ``InvalidParameter`` naming the first disjoint pair.
    """
    chain = list(chain)
    if not chain:
        raise InvalidParameter("empty chain")
    space = chain[0].space
    if not space.finite:
        raise InvalidParameter(f"chain_intersection enumerates members; {space} is infinite")
    for (i, a), (j, b) in combinations(enumerate(chain), 2):
        if ball_relation(a, b) is BallRelation.DISJOINT:
            raise InvalidParameter(f"balls {i} ({a}) and {j} ({b}) are not comparable by inclusion")
    common = chain[0].members()
    for b in chain[1:]:
        common &= b.members()
    return sorted(common)
