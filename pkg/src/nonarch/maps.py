"""Declarative maps between spaces and their evaluation.

Every map is a small frozen dataclass whose ``str`` is its mini-language
form (``affine:a=1/3,b=2``, ``cube``, ``q2inv``, ``hensel:p=3,s=0,0,1``,
``translate:b=5``, ``compose:[f;g]``).  Maps act on a space given at
call time; on ``QpVector`` spaces they act coordinatewise.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidParameter
from .spaces import FiniteModel, QpVector, TrivialLine
from .valuation import as_rational, check_prime


def _constant(space, c):
    if isinstance(space, QpVector):
        return space.point([c] * space.dim)
    return space.point(c)


@dataclass(frozen=True)
class Affine:
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a == 0:
            raise InvalidParameter("affine map needs a != 0")

    def __str__(self):
        return f"affine:a={self.a},b={self.b}"

    def apply(self, space, x):
        return space.add(space.scalar_mul(self.a, x), _constant(space, self.b))


@dataclass(frozen=True)
class Translation:
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "b", as_rational(self.b))

    def __str__(self):
        return f"translate:b={self.b}"

    def apply(self, space, x):
        return space.add(x, _constant(space, self.b))


IDENTITY = Translation(Fraction(0))


@dataclass(frozen=True)
class Cube:
    """x -> x**3; an isometry of the trivially valued line."""

    def __str__(self):
        return "cube"

    def apply(self, space, x):
        if isinstance(space, TrivialLine):
            return space.check(x) ** 3
        if isinstance(space, FiniteModel):
            return pow(space.check(x), 3, space.modulus)
        raise DomainError(f"cube is defined on the trivial line and residue models, not {space}")


@dataclass(frozen=True)
class Q2Inversion:
    """x -> 1/x when |x|_2 = 1, identity otherwise."""

    def __str__(self):
        return "q2inv"

    def apply(self, space, x):
        if getattr(space, "p", None) != 2 or isinstance(space, QpVector) and space.dim != 1:
            raise DomainError(f"q2inv lives on one-dimensional 2-adic spaces, not {space}")
        if space.norm(x) != space.one_norm():
            return x
        if isinstance(space, QpVector):
            return (1 / x[0],)
        if isinstance(space, FiniteModel):
            return pow(x, -1, space.modulus)
        return 1 / x


@dataclass(frozen=True)
class HenselPerturb:
    """x -> x + p*s(x), s an integer polynomial (coefficients constant first)."""

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __str__(self):
        return f"hensel:p={self.p},s=" + ",".join(str(c) for c in self.coeffs or (0,))

    def _check_domain(self, space):
        if not isinstance(space, (QpVector, FiniteModel)) or space.p != self.p:
            raise DomainError(f"{self} needs a {self.p}-adic vector space or residue model, not {space}")

    def s(self, space, x):
        """Evaluate the perturbation polynomial pointwise (Horner)."""
        self._check_domain(space)
        if isinstance(space, FiniteModel):
            acc = 0
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % space.modulus
            return acc
        out = []
        for xi in space.check(x):
            acc = space.scalar(0)
            for c in reversed(self.coeffs):
                acc = acc * xi + c
            out.append(acc)
        return tuple(out)

    def apply(self, space, x):
        return space.add(x, space.scalar_mul(self.p, self.s(space, x)))


@dataclass(frozen=True)
class Compose:
    """Composition in the usual order: compose:[f;g] is x -> f(g(x))."""

    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise InvalidParameter("compose needs at least one map")

    def __str__(self):
        return "compose:[" + ";".join(str(m) for m in self.maps) + "]"

    def apply(self, space, x):
        for m in reversed(self.maps):
            x = m.apply(space, x)
        return x


MAP_TYPES = (Affine, Translation, Cube, Q2Inversion, HenselPerturb, Compose)


def apply(f, space, x):
    return f.apply(space, x)

