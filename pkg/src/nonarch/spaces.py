"""Non-Archimedean normed spaces and strict convexity.

Four concrete spaces are provided.  Points are plain values:

* ``QpVector(p, N, dim)`` -- tuples of ``PAdicNumber`` with the max norm;
* ``RationalLine(p)`` -- ``Fraction`` with the exact p-adic norm (Q inside Q_p);
* ``TrivialLine()`` -- ``Fraction`` with the trivial absolute value;
* ``FiniteModel(p, N)`` -- residues ``0 <= x < p**N`` with the truncated
  p-adic norm.  This is the finite, exhaustively searchable stand-in for
  the unit ball of Q_p.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import IncompatibleOperands, InvalidParameter, PreconditionError, SizeGuardError
from .padic import DEFAULT_PRECISION, PAdicNumber
from .reports import Report, format_value
from .valuation import TRIVIAL, NormValue, _strip, abs_p, as_rational, check_prime, trivial_abs

MAX_EXHAUSTIVE = 10**6


class Space:
    """Shared behaviour; subclasses supply the arithmetic."""

    base = None
    finite = False

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def dist(self, x, y):
        return self.norm(self.sub(x, y))

    def norm_bound(self, x):
        return self.norm(x)

    def equal(self, x, y):
        return x == y

    @property
    def two_is_unit(self):
        return self.scalar_abs(self.scalar(2)) == NormValue(self.base, 0)

    def require_two_unit(self, what="this operation"):
        if not self.two_is_unit:
            raise PreconditionError(f"{what} needs |2| = 1, but |2| = {self.scalar_abs(self.scalar(2))} in {self}")

    def halve(self, x):
        return self.scalar_mul(self.scalar(Fraction(1, 2)), x)

    def one_norm(self):
        return NormValue(self.base, 0)

    def elements(self):
        raise SizeGuardError(f"{self} is infinite; pass an explicit sample")

    def format(self, x):
        return format_value(x)


@dataclass(frozen=True)
class QpVector(Space):
    p: int
    N: int = DEFAULT_PRECISION
    dim: int = 1

    def __post_init__(self):
        check_prime(self.p)
        if self.N < 1 or self.dim < 1:
            raise InvalidParameter("qp spaces need N >= 1 and dim >= 1")

    @property
    def base(self):
        return self.p

    def __str__(self):
        return f"qp:p={self.p},N={self.N},dim={self.dim}"

    def check(self, x):
        if not (isinstance(x, tuple) and len(x) == self.dim
                and all(isinstance(c, PAdicNumber) and c.p == self.p for c in x)):
            raise IncompatibleOperands(f"{x!r} is not a point of {self}")
        return x

    def scalar(self, q):
        if isinstance(q, PAdicNumber):
            if q.p != self.p:
                raise IncompatibleOperands(f"scalar from Q_{q.p} used in {self}")
            return q
        return PAdicNumber.from_rational(as_rational(q), self.p, self.N)

    def scalar_abs(self, r):
        return self.scalar(r).norm()

    def point(self, value):
        if isinstance(value, tuple) and all(isinstance(c, PAdicNumber) for c in value):
            return self.check(value)
        if not isinstance(value, (list, tuple)):
            value = [value]
        if len(value) != self.dim:
            raise InvalidParameter(f"{self} expects {self.dim} coordinates, got {len(value)}")
        return tuple(self.scalar(c) for c in value)

    def zero(self):
        return tuple(PAdicNumber.exact_zero(self.p, self.N) for _ in range(self.dim))

    def unit_point(self):
        return self.point([1] * self.dim)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(self.check(x), self.check(y)))

    def neg(self, x):
        return tuple(-a for a in self.check(x))

    def scalar_mul(self, r, x):
        r = self.scalar(r)
        return tuple(r * a for a in self.check(x))

    def norm(self, x):
        return max((c.norm() for c in self.check(x)), default=NormValue.zero(self.p))

    def norm_bound(self, x):
        return max(c.norm_bound() for c in self.check(x))

    def equal(self, x, y):
        return all(c.is_zero for c in self.sub(x, y))

    def precision(self, x):
        return min(c.abs_prec for c in self.check(x))

    def random_point(self, rng):
        return self.point([random_rational(rng) for _ in range(self.dim)])

    def format(self, x):
        parts = [str(c) for c in x]
        return parts[0] if self.dim == 1 else "(" + ", ".join(parts) + ")"

    def to_json(self, x):
        return [c.to_json() for c in x]


class _RationalField(Space):
    """Q with an exact absolute value; points and scalars are Fractions."""

    def check(self, x):
        if not isinstance(x, Fraction):
            raise IncompatibleOperands(f"{x!r} is not a point of {self}")
        return x

    def scalar(self, q):
        return as_rational(q)

    def point(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) != 1:
                raise InvalidParameter(f"{self} is one-dimensional")
            value = value[0]
        return as_rational(value)

    def zero(self):
        return Fraction(0)

    def unit_point(self):
        return Fraction(1)

    def add(self, x, y):
        return self.check(x) + self.check(y)

    def neg(self, x):
        return -self.check(x)

    def scalar_mul(self, r, x):
        return as_rational(r) * self.check(x)

    def norm(self, x):
        return self.scalar_abs(self.check(x))

    def precision(self, x):
        return float("inf")

    def random_point(self, rng):
        return random_rational(rng)

    def to_json(self, x):
        return str(x)


@dataclass(frozen=True)
class RationalLine(_RationalField):
    p: int

    def __post_init__(self):
        check_prime(self.p)

    @property
    def base(self):
        return self.p

    def __str__(self):
        return f"rat:p={self.p}"

    def scalar_abs(self, r):
        return abs_p(r, self.p)


@dataclass(frozen=True)
class TrivialLine(_RationalField):
    base = TRIVIAL
    p = None

    def __str__(self):
        return "trivial"

    def scalar_abs(self, r):
        return trivial_abs(r)


@dataclass(frozen=True)
class FiniteModel(Space):
    p: int
    N: int

    finite = True

    def __post_init__(self):
        check_prime(self.p)
        if self.N < 0:
            raise InvalidParameter("model needs N >= 0")

    @property
    def base(self):
        return self.p

    @property
    def modulus(self):
        return self.p**self.N

    @property
    def size(self):
        return self.modulus

    def __str__(self):
        return f"model:p={self.p},N={self.N}"

    def check(self, x):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.modulus:
            raise IncompatibleOperands(f"{x!r} is not a residue of {self}")
        return x

    def scalar(self, q):
        q = as_rational(q)
        if q.denominator % self.p == 0:
            raise InvalidParameter(f"{q} is not {self.p}-integral; no image in {self}")
        return q.numerator * pow(q.denominator, -1, self.modulus) % self.modulus if self.N else 0

    def scalar_abs(self, r):
        return self.norm(r % self.modulus)

    def point(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) != 1:
                raise InvalidParameter(f"{self} is one-dimensional")
            value = value[0]
        return self.scalar(value)

    def zero(self):
        return 0

    def unit_point(self):
        return 1 % self.modulus

    def add(self, x, y):
        return (self.check(x) + self.check(y)) % self.modulus

    def neg(self, x):
        return -self.check(x) % self.modulus

    def scalar_mul(self, r, x):
        if not isinstance(r, int):
            r = self.scalar(r)
        return r * self.check(x) % self.modulus

    @property
    def two_is_unit(self):
        # in the one-point model (N = 0) every residue is 0; only p matters
        return self.p != 2

    def valuation(self, x):
        """Truncated valuation min(v(x), N)."""
        if x % self.modulus == 0:
            return self.N
        return _strip(x, self.p)[0]

    def norm(self, x):
        v = self.valuation(self.check(x))
        return NormValue.zero(self.p) if v >= self.N else NormValue(self.p, -v)

    def precision(self, x):
        return self.N

    def elements(self):
        if self.modulus > MAX_EXHAUSTIVE:
            raise SizeGuardError(f"{self} has {self.modulus} points (> {MAX_EXHAUSTIVE}); pass a sample")
        return range(self.modulus)

    def random_point(self, rng):
        return rng.randrange(self.modulus)

    def to_json(self, x):
        return x


def random_rational(rng, height=50):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _points(space, sample):
    if sample is None:
        return list(space.elements())
    return [space.point(x) for x in sample]


def point_add(space, x, y):
    return space.add(x, y)


def point_neg(space, x):
    return space.neg(x)


def scalar_mul(space, r, x):
    return space.scalar_mul(r, x)


def space_norm(space, x):
    return space.norm(x)


def _expected_scaled_norm(space, r, x):
    """|r| * ||x||, with the residue model's truncation at p**-N applied."""
    expected = space.scalar_abs(r) * space.norm(x)
    if isinstance(space, FiniteModel) and not expected.is_zero and -expected.exp >= space.N:
        return NormValue.zero(space.p)
    return expected


def check_norm_axioms(space, sample=None, scalars=None):
    """Definiteness, homogeneity over ``scalars`` and the strong triangle.

    Also checks the equality case ||x + y|| = max(||x||, ||y||) whenever
    the two norms differ.  ``sample=None`` means every point of a finite
    space.
    """
    pts = _points(space, sample)
    scalars = [space.scalar(r) for r in (scalars if scalars is not None else [0, 1, -1, 2, 3])]
    report = Report("norm_axioms")
    zero = space.zero()
    norms = [space.norm(x) for x in pts]
    for x, n in zip(pts, norms):
        if n.is_zero != space.equal(x, zero):
            report.add("definiteness", x, n)
        for r in scalars:
            got = space.norm(space.scalar_mul(r, x))
            want = _expected_scaled_norm(space, r, x)
            if got != want:
                report.add("homogeneity", r, x, got, want)
    for (x, nx), (y, ny) in combinations_with_replacement(list(zip(pts, norms)), 2):
        report.pairs_checked += 1
        s = space.norm(space.add(x, y))
        top = max(nx, ny)
        if not s <= top:
            report.add("strong_triangle", x, y, s, top)
        elif nx != ny and s != top:
            report.add("equality_case", x, y, s, top)
    return report


def check_metric(space, sample=None):
    """Identity, symmetry and the ultrametric inequality over all triples."""
    pts = _points(space, sample)
    report = Report("metric")
    d = [[space.dist(x, y) for y in pts] for x in pts]
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if d[i][j].is_zero != space.equal(x, y):
                report.add("identity", x, y, d[i][j])
            if d[i][j] != d[j][i]:
                report.add("symmetry", x, y, d[i][j])
            row = d[i]
            for k, z in enumerate(pts):
                report.pairs_checked += 1
                if not row[k] <= max(row[j], d[j][k]):
                    report.add("ultrametric", x, y, z)
    return report


def is_convexity_witness(space, x, y):
    nx, ny = space.norm(x), space.norm(y)
    return nx == ny and space.norm(space.add(x, y)) == max(nx, ny) and not space.equal(x, y)


def strict_convexity_witness(space, sample=None):
    """Least pair (x, y), x != y, with ||x|| = ||y|| = ||x + y||, or None.

    Pairs are scanned in canonical order: sample (or residue) order,
    first coordinate outermost.  ``None`` after an exhaustive scan of a
    finite model certifies that model strictly convex.
    """
    space.require_two_unit("strict convexity")
    for x, y in combinations(_points(space, sample), 2):
        if is_convexity_witness(space, x, y):
            return x, y
    return None


@dataclass(frozen=True)
class ValueSetReport:
    attained: frozenset
    field_values: frozenset

    @property
    def matches(self):
        return self.attained == self.field_values


def value_set_report(space, sample=None, scalars=None):
    """Attained norms of the sample against |r| for the sampled scalars.

    Without explicit scalars, the sample's coordinates serve as scalars
    (for a finite model, every residue).
    """
    pts = _points(space, sample)
    if scalars is None:
        if isinstance(space, QpVector):
            scalars = [c for x in pts for c in x]
        else:
            scalars = pts
    attained = frozenset(space.norm(x) for x in pts)
    field_values = frozenset(space.scalar_abs(space.scalar(r)) for r in scalars)
    return ValueSetReport(attained, field_values)
