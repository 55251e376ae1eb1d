"""Isometry, additivity and midpoint checks, plus the counterexample gallery.

Every check walks pairs in canonical order (sample order, first index
outermost), so the first violation in a report is the least witness.
For a map f the checks work with g = f - f(0), with f(0) computed once
per report.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
import random

from .errors import PreconditionError
from .maps import Cube, Q2Inversion
from .reports import Report
from .spaces import RationalLine, TrivialLine, _points, random_rational


def _translated(f, space):
    f0 = f.apply(space, space.zero())
    return lambda x: space.sub(f.apply(space, x), f0)


def check_isometry(f, space, sample=None):
    """Compare ||f(x) - f(y)|| with ||x - y|| over all pairs of the sample."""
    pts = _points(space, sample)
    images = [f.apply(space, x) for x in pts]
    report = Report("isometry")
    for (x, fx), (y, fy) in combinations(list(zip(pts, images)), 2):
        report.pairs_checked += 1
        before, after = space.dist(x, y), space.dist(fx, fy)
        if before != after:
            report.add(x, y, before, after)
    return report


def midpoint(space, x, y):
    """(x + y)/2, checked to sit at distance ||x - y|| from both ends."""
    space.require_two_unit("midpoint")
    m = space.halve(space.add(x, y))
    d = space.dist(x, y)
    if space.dist(x, m) != d or space.dist(y, m) != d:
        raise ArithmeticError(f"midpoint of {x}, {y} is not equidistant")
    return m


def equidistant_points(space, x, y):
    """All z with ||x - z|| = ||y - z|| = ||x - y||, in residue order.

    A singleton is the uniqueness the midpoint lemma asserts; anything
    larger shows constructively that the model is not strictly convex.
    """
    if not space.finite:
        raise PreconditionError(f"equidistant_points needs a finite residue model, not {space}")
    x, y = space.check(x), space.check(y)
    if space.equal(x, y):
        raise PreconditionError("x = y: every point of the sphere qualifies; nothing to decide")
    d = space.dist(x, y)
    return [z for z in space.elements() if space.dist(x, z) == d and space.dist(y, z) == d]


def check_midpoint_equation(f, space, sample=None):
    """g((x+y)/2) == (g(x) + g(y))/2 for g = f - f(0)."""
    space.require_two_unit("the midpoint equation")
    pts = _points(space, sample)
    g = _translated(f, space)
    images = [g(x) for x in pts]
    report = Report("midpoint_equation")
    for (x, gx), (y, gy) in combinations_with_replacement(list(zip(pts, images)), 2):
        report.pairs_checked += 1
        lhs = g(space.halve(space.add(x, y)))
        rhs = space.halve(space.add(gx, gy))
        if not space.equal(lhs, rhs):
            report.add(x, y, lhs, rhs)
    return report


def check_additivity(f, space, sample=None):
    """g(x + y) == g(x) + g(y) for g = f - f(0)."""
    pts = _points(space, sample)
    g = _translated(f, space)
    images = [g(x) for x in pts]
    report = Report("additivity")
    for (x, gx), (y, gy) in combinations_with_replacement(list(zip(pts, images)), 2):
        report.pairs_checked += 1
        lhs = g(space.add(x, y))
        rhs = space.add(gx, gy)
        if not space.equal(lhs, rhs):
            report.add(x, y, lhs, rhs)
    return report


def check_rational_homogeneity(f, space, points, scalars):
    """g(q*x) == q*g(x) for every sampled scalar q and point x."""
    pts = _points(space, points)
    g = _translated(f, space)
    report = Report("rational_homogeneity")
    for q in scalars:
        q = space.scalar(q)
        for x in pts:
            report.pairs_checked += 1
            lhs = g(space.scalar_mul(q, x))
            rhs = space.scalar_mul(q, g(x))
            if not space.equal(lhs, rhs):
                report.add(q, x, lhs, rhs)
    return report


# --- gallery --------------------------------------------------------------

Q2_SEED_SAMPLE = (0, 1, 3, Fraction(1, 3), 4, 5, 8, Fraction(1, 5))


def q2_gallery_sample(size=50, seed=0):
    """Seeded rationals starting with a fixed mix of unit and non-unit 2-adic norms."""
    rng = random.Random(seed)
    sample = [Fraction(q) for q in Q2_SEED_SAMPLE]
    seen = set(sample)
    while len(sample) < size:
        q = random_rational(rng, height=40)
        if q not in seen:
            seen.add(q)
            sample.append(q)
    return sample


@dataclass
class GallerySection:
    title: str
    space: object
    map: object
    isometry: Report
    additivity: Report

    @property
    def confirmed(self):
        """The counterexample stands: an isometry that is not additive."""
        return self.isometry.passed and not self.additivity.passed

    def line(self):
        return f"isometry: {self.isometry.summary()}, additive: {self.additivity.summary()}"

    def to_dict(self):
        return {
            "title": self.title,
            "space": str(self.space),
            "map": str(self.map),
            "isometry": self.isometry.to_dict(limit=5),
            "additivity": self.additivity.to_dict(limit=5),
            "confirmed": self.confirmed,
        }


def gallery(seed=0, q2_size=50):
    """Run both counterexamples: an isometry whose g = f - f(0) is not additive."""
    trivial = TrivialLine()
    cube_sample = [Fraction(n) for n in range(-3, 4)]
    cube = GallerySection(
        "cube on the trivially valued line", trivial, Cube(),
        check_isometry(Cube(), trivial, cube_sample),
        check_additivity(Cube(), trivial, cube_sample))

    q2 = RationalLine(2)
    q2_sample = q2_gallery_sample(q2_size, seed)
    inversion = GallerySection(
        "unit inversion on Q inside Q_2", q2, Q2Inversion(),
        check_isometry(Q2Inversion(), q2, q2_sample),
        check_additivity(Q2Inversion(), q2, q2_sample))
    return [cube, inversion]
