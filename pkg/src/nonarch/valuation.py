"""Exact rationals, the p-adic and trivial valuations, and field-axiom checks.

Absolute values are kept as ``NormValue`` objects: either zero or
``base**exp`` with an integer exponent.  Nothing is ever converted to a
float, so equality and ordering are exact.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import combinations_with_replacement
import math

from .errors import IncompatibleOperands, InvalidParameter, PreconditionError
from .reports import Report

TRIVIAL = "trivial"
MAX_PRIME = 10**6
INF = math.inf


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p):
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidParameter(f"prime must be an integer, got {p!r}")
    if p > MAX_PRIME:
        raise InvalidParameter(f"p={p} exceeds the supported bound {MAX_PRIME}")
    if not is_prime(p):
        raise InvalidParameter(f"p={p} is not prime")
    return p


def as_rational(q):
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int) and not isinstance(q, bool):
        return Fraction(q)
    raise InvalidParameter(f"expected an exact rational, got {q!r}")


def _strip(n, p):
    """Return (k, m) with n = p**k * m and p not dividing m; n != 0."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


@total_ordering
@dataclass(frozen=True, eq=False)
class NormValue:
    """An exact absolute value: zero, or ``base**exp``.

    ``base`` is a prime or ``TRIVIAL`` (then the only finite value is 1).
    ``exp`` is None for the zero value.
    """

    base: object
    exp: object = None

    def __post_init__(self):
        if self.base == TRIVIAL and self.exp not in (None, 0):
            raise InvalidParameter("trivial absolute values are 0 or 1")

    @classmethod
    def zero(cls, base):
        return cls(base, None)

    @classmethod
    def power(cls, base, exp):
        return cls(base, int(exp))

    @property
    def is_zero(self):
        return self.exp is None

    def _compatible(self, other):
        if not isinstance(other, NormValue):
            return NotImplemented
        if self.is_zero or other.is_zero or self.base == other.base:
            return True
        raise IncompatibleOperands(
            f"cannot compare absolute values over different fields ({self.base} vs {other.base})")

    def __eq__(self, other):
        ok = self._compatible(other)
        if ok is NotImplemented:
            return ok
        return self.exp == other.exp

    def __hash__(self):
        return hash(self.exp)

    def __lt__(self, other):
        ok = self._compatible(other)
        if ok is NotImplemented:
            return ok
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.exp < other.exp

    def __mul__(self, other):
        if not isinstance(other, NormValue):
            return NotImplemented
        self._compatible(other)
        base = self.base if not self.is_zero else other.base
        if self.is_zero or other.is_zero:
            return NormValue.zero(base)
        return NormValue(self.base, self.exp + other.exp)

    def __str__(self):
        if self.is_zero:
            return "0"
        if self.exp == 0:
            return "1"
        return f"{self.base}^{self.exp}"

    def __repr__(self):
        return f"NormValue({self.base!r}, {self.exp!r})"

    def as_fraction(self):
        """Exact rational value; the trivial 1 maps to 1."""
        if self.is_zero:
            return Fraction(0)
        if self.exp == 0:
            return Fraction(1)
        return Fraction(self.base) ** self.exp


def padic_val(q, p):
    """Exponent of p in the rational q, or ``INF`` when q == 0."""
    check_prime(p)
    q = as_rational(q)
    if q == 0:
        return INF
    kn, _ = _strip(abs(q.numerator), p)
    kd, _ = _strip(q.denominator, p)
    return kn - kd


def abs_p(q, p):
    v = padic_val(q, p)
    if v == INF:
        return NormValue.zero(p)
    return NormValue(p, -v)


def trivial_abs(q):
    q = as_rational(q)
    return NormValue(TRIVIAL, None if q == 0 else 0)


def absolute(q, base):
    """|q| for ``base`` a prime or ``TRIVIAL``."""
    if base == TRIVIAL:
        return trivial_abs(q)
    return abs_p(q, base)


def check_field_axioms(base, sample):
    """Check the valuation axioms over every pair drawn from ``sample``.

    Covers |rs| = |r||s|, the strong triangle inequality, |r| = 0 iff
    r = 0, and |n| <= 1 for the natural numbers present in the sample.
    """
    if base != TRIVIAL:
        check_prime(base)
    sample = [as_rational(q) for q in sample]
    report = Report("field_axioms")
    norms = {}
    for q in sample:
        a = norms[q] = absolute(q, base)
        if a.is_zero != (q == 0):
            report.add("definiteness", q, a)
        if q.denominator == 1 and q >= 0 and not a <= NormValue(base, 0):
            report.add("natural_bound", q, a)
    for r, s in combinations_with_replacement(sample, 2):
        report.pairs_checked += 1
        prod = absolute(r * s, base)
        if prod != norms[r] * norms[s]:
            report.add("multiplicativity", r, s, prod, norms[r] * norms[s])
        tot = absolute(r + s, base)
        bound = max(norms[r], norms[s])
        if not tot <= bound:
            report.add("strong_triangle", r, s, tot, bound)
    return report


def sharp_triangle(a, b, base):
    """|a - b| when |a| != |b|; it always equals max(|a|, |b|)."""
    na, nb = absolute(a, base), absolute(b, base)
    if na == nb:
        raise PreconditionError(f"|{a}| = |{b}| = {na}: equality case is not guaranteed")
    diff = absolute(as_rational(a) - as_rational(b), base)
    if diff != max(na, nb):
        raise ArithmeticError(f"sharp triangle failed for {a}, {b}")
    return diff
