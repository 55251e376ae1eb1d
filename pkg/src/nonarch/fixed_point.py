"""Contraction iteration, inversion of Hensel-type isometries, and the
solution v of f(u) + f(v) = f((u + v)/k).

For a surjective isometry f and a natural k with |k| < 1 the map

    h = phi o f^-1 o psi o f,   phi(x) = k*x - u,   psi(y) = f(u) + y

is a contraction, and its fixed point v is the required solution.  The
iteration never trusts contractiveness: each step checks that the
residual ||h(x_n) - x_n|| strictly drops.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation, DomainError, InvalidParameter, NonConvergence, PreconditionError
from .maps import Affine, Compose, Cube, HenselPerturb, Q2Inversion, Translation
from .spaces import FiniteModel, QpVector, RationalLine, TrivialLine
from .valuation import NormValue, padic_val


@dataclass(frozen=True)
class FixedPointResult:
    v: object
    iterations: int
    residual: NormValue
    residuals: tuple = ()
    verified: object = None
    starts_agreed: object = None

    @property
    def residual_exp(self):
        """-log_p of the residual; None when the residual is exactly zero."""
        return None if self.residual.is_zero else -self.residual.exp


def _tolerance(space, target_exp):
    if space.base is None or isinstance(space.base, str):
        raise InvalidParameter(f"fixed-point iteration needs a p-adic space, not {space}")
    return NormValue(space.base, -target_exp)


def _close(space, a, b, target_exp):
    return space.norm_bound(space.sub(a, b)) <= _tolerance(space, target_exp)


def iterate_contraction(h, space, x0, target_exp, max_iter=100):
    """Iterate ``h`` from ``x0`` until ||h(x) - x|| <= p**-target_exp.

    ``h`` is a callable on points or a map spec.  Before iterating, the
    pair (x0, x0 + 1) is probed for contraction so that maps fixing x0
    (the identity, say) are still rejected.
    """
    if not callable(h):
        spec = h
        h = lambda x: spec.apply(space, x)  # noqa: E731
    tol = _tolerance(space, target_exp)
    x = space.check(x0)

    e = space.unit_point()
    probe = space.norm_bound(space.sub(h(space.add(x, e)), h(x)))
    if not probe < space.norm(e):
        raise ContractViolation(
            f"map is not contractive: ||h(x0+1) - h(x0)|| = {probe} >= 1", pair=(x, space.add(x, e)))

    residuals = []
    prev = None
    for it in range(1, max_iter + 1):
        hx = h(x)
        diff = space.sub(hx, x)
        r = space.norm_bound(diff)
        residuals.append(r)
        if r <= tol:
            return FixedPointResult(x, it, r, tuple(residuals))
        if prev is not None and not r < prev[0]:
            if space.norm(diff) != r:
                raise NonConvergence(
                    f"precision exhausted at residual {r} before reaching {tol}")
            raise ContractViolation(
                f"step {it}: residual {r} did not drop below {prev[0]}", pair=(prev[1], x))
        prev = (r, x)
        x = hx
    raise NonConvergence(f"no convergence to {tol} within {max_iter} iterations (last residual {r})")


def as_point(space, value):
    """Coerce a rational (broadcast over coordinates) or a point to a point."""
    if isinstance(space, QpVector) and not isinstance(value, (list, tuple)):
        value = [value] * space.dim
    return space.point(value)


def _require_integral(space, y):
    if isinstance(space, QpVector) and not space.norm(y) <= space.one_norm():
        raise DomainError(f"{space.format(y)} lies outside the integer ball")


def invert_isometry(f, space, y, target_exp=None, max_iter=200):
    """Solve f(x) = y for f(x) = x + p*s(x) by iterating x -> y - p*s(x).

    That iteration contracts by at least 1/p on the integer ball.  The
    returned result carries ``verified``: whether ||f(x*) - y|| is within
    the target.
    """
    if not isinstance(f, HenselPerturb):
        raise InvalidParameter(f"invert_isometry handles hensel maps, not {f}")
    f._check_domain(space)
    y = space.check(y)
    _require_integral(space, y)
    if target_exp is None:
        target_exp = min(space.N, space.precision(y))
    step = lambda x: space.sub(y, space.scalar_mul(f.p, f.s(space, x)))  # noqa: E731
    res = iterate_contraction(step, space, y, target_exp, max_iter)
    ok = _close(space, f.apply(space, res.v), y, target_exp)
    return FixedPointResult(res.v, res.iterations, res.residual, res.residuals, ok)


def _cube_root(q):
    def iroot(n):
        r = round(abs(n) ** (1 / 3))
        for c in (r - 1, r, r + 1):
            if c**3 == abs(n):
                return c if n >= 0 else -c
        return None

    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        raise DomainError(f"{q} has no rational cube root")
    return Fraction(a, b)


def inverse(f, space, y):
    """f^-1(y): closed form where available, iteration for hensel maps."""
    if isinstance(f, Translation):
        return space.sub(y, f.apply(space, space.zero()))
    if isinstance(f, Affine):
        shifted = space.sub(y, f.apply(space, space.zero()))
        if isinstance(space, FiniteModel):
            try:
                a_inv = pow(space.scalar(f.a), -1, space.modulus)
            except ValueError:
                raise DomainError(f"{f.a} is not a unit of {space}") from None
        else:
            a_inv = space.scalar(1 / f.a)
        return space.scalar_mul(a_inv, shifted)
    if isinstance(f, Q2Inversion):
        return f.apply(space, y)
    if isinstance(f, HenselPerturb):
        return invert_isometry(f, space, y).v
    if isinstance(f, Cube) and not isinstance(space, FiniteModel):
        return _cube_root(space.check(y))
    if isinstance(f, Compose):
        for m in f.maps:
            y = inverse(m, space, y)
        return y
    raise DomainError(f"no inverse available for {f} on {space}")


def proposition_v(f, space, u, k=None, target_exp=None, starts=None, max_iter=64):
    """The unique v with f(u) + f(v) = f((u + v)/k), found by iteration.

    Runs from every start in ``starts`` (default: 0 and 5) and reports
    whether they agree; then checks the identity independently and
    records the outcome in ``verified``.
    """
    if isinstance(space, TrivialLine):
        raise PreconditionError("|k| = 1 for every nonzero k under the trivial valuation")
    if not isinstance(space, (QpVector, RationalLine)):
        raise InvalidParameter(f"{space}: k must be invertible, use a qp or rat space")
    k = space.p if k is None else k
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be a natural number, got {k!r}")
    if not space.scalar_abs(space.scalar(k)) < space.one_norm():
        raise PreconditionError(f"|{k}| = 1 in {space}; need |k| < 1")
    if target_exp is None:
        target_exp = space.N - 4 if isinstance(space, QpVector) else 12
    # a residual r in v leaves a defect r/|k| in the identity
    inner_target = target_exp + padic_val(k, space.p)

    u = as_point(space, u)
    fu = f.apply(space, u)
    kk = space.scalar(k)

    def h(x):
        return space.sub(space.scalar_mul(kk, inverse(f, space, space.add(fu, f.apply(space, x)))), u)

    if starts is None:
        starts = [0, 5]
    starts = [as_point(space, s) for s in starts]
    runs = [iterate_contraction(h, space, s, inner_target, max_iter) for s in starts]
    first = runs[0]
    agreed = all(_close(space, r.v, first.v, target_exp) for r in runs[1:])
    verified = identity_holds(f, space, u, first.v, k, target_exp)
    return FixedPointResult(first.v, first.iterations, first.residual, first.residuals,
                            verified, agreed)


def identity_defect(f, space, u, v, k):
    """f(u) + f(v) - f((u + v)/k)."""
    lhs = space.add(f.apply(space, u), f.apply(space, v))
    rhs = f.apply(space, space.scalar_mul(space.scalar(Fraction(1, k)), space.add(u, v)))
    return space.sub(lhs, rhs)


def identity_holds(f, space, u, v, k, target_exp):
    defect = identity_defect(f, space, u, v, k)
    return space.norm_bound(defect) <= _tolerance(space, target_exp)
