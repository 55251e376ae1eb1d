"""Truncated p-adic numbers with relative-precision bookkeeping.

A nonzero ``PAdicNumber`` stands for ``p**val * unit + O(p**(val + prec))``
with ``unit`` a residue mod ``p**prec`` prime to p.  Zeros come in two
flavours: the exact zero (``val is None``) and "zero to precision"
``O(p**val)``, produced when every retained digit cancels.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactZeroDivision, IncompatibleOperands, InsufficientPrecision, InvalidParameter
from .valuation import INF, NormValue, _strip, as_rational, check_prime, padic_val

DEFAULT_PRECISION = 16


@dataclass(frozen=True)
class DigitExpansion:
    val: int
    digits: tuple

    def value(self, p):
        return sum(Fraction(d) * Fraction(p) ** (self.val + i) for i, d in enumerate(self.digits))


@dataclass(frozen=True)
class PAdicNumber:
    p: int
    prec: int
    val: object  # int, or None for the exact zero
    unit: int = 0

    # construction ---------------------------------------------------------

    @classmethod
    def from_rational(cls, q, p, prec=DEFAULT_PRECISION):
        check_prime(p)
        if isinstance(prec, bool) or not isinstance(prec, int) or prec < 1:
            raise InvalidParameter(f"precision must be a positive integer, got {prec!r}")
        q = as_rational(q)
        if q == 0:
            return cls(p, prec, None, 0)
        v = padic_val(q, p)
        r = q / Fraction(p) ** v
        mod = p**prec
        return cls(p, prec, v, r.numerator * pow(r.denominator, -1, mod) % mod)

    @classmethod
    def exact_zero(cls, p, prec=DEFAULT_PRECISION):
        return cls(p, prec, None, 0)

    @classmethod
    def big_oh(cls, p, absprec, prec=DEFAULT_PRECISION):
        """The element O(p**absprec): zero to the given absolute precision."""
        return cls(p, prec, absprec, 0)

    @classmethod
    def _normalize(cls, p, prec, v, s, absprec):
        # value s * p**v known modulo p**absprec
        if s == 0:
            return cls.big_oh(p, absprec, prec)
        k, s = _strip(s, p)
        v += k
        if v >= absprec:
            return cls.big_oh(p, absprec, prec)
        rel = absprec - v
        return cls(p, rel, v, s % p**rel)

    # predicates -----------------------------------------------------------

    @property
    def is_zero(self):
        return self.unit == 0

    @property
    def is_exact_zero(self):
        return self.unit == 0 and self.val is None

    @property
    def abs_prec(self):
        """Absolute precision: the value is known modulo p**abs_prec."""
        if self.val is None:
            return INF
        if self.unit == 0:
            return self.val
        return self.val + self.prec

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PAdicNumber):
            if other.p != self.p:
                raise IncompatibleOperands(f"cannot combine elements of Q_{self.p} and Q_{other.p}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            # exact constants must not cost absolute precision
            prec = self.prec
            if other != 0 and self.abs_prec != INF:
                prec = max(prec, self.abs_prec - padic_val(other, self.p))
            return PAdicNumber.from_rational(other, self.p, prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        absprec = min(self.abs_prec, other.abs_prec)
        prec = max(self.prec, other.prec)
        terms = [(x.val, x.unit) for x in (self, other) if not x.is_zero]
        if not terms:
            return PAdicNumber.big_oh(self.p, absprec, prec)
        v0 = min(v for v, _ in terms)
        s = sum(u * self.p ** (v - v0) for v, u in terms)
        return PAdicNumber._normalize(self.p, prec, v0, s, absprec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return PAdicNumber(self.p, self.prec, self.val, -self.unit % self.p**self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_exact_zero or other.is_exact_zero:
            return PAdicNumber.exact_zero(self.p, self.prec)
        if self.is_zero or other.is_zero:
            # O(p^k) * y lies in p^(k + v(y)) Z_p
            return PAdicNumber.big_oh(self.p, self.val + other.val, max(self.prec, other.prec))
        prec = min(self.prec, other.prec)
        return PAdicNumber(self.p, prec, self.val + other.val,
                           self.unit * other.unit % self.p**prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_exact_zero:
            raise ExactZeroDivision("division by an exact zero")
        if other.is_zero:
            raise InsufficientPrecision(
                f"divisor is zero to precision O({self.p}^{other.val}); its valuation is unknown")
        if self.is_exact_zero:
            return self
        if self.is_zero:
            return PAdicNumber.big_oh(self.p, self.val - other.val, self.prec)
        prec = min(self.prec, other.prec)
        mod = self.p**prec
        return PAdicNumber(self.p, prec, self.val - other.val,
                           self.unit * pow(other.unit, -1, mod) % mod)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    # inspection -----------------------------------------------------------

    def norm(self):
        if self.is_zero:
            return NormValue.zero(self.p)
        return NormValue(self.p, -self.val)

    def norm_bound(self):
        """Upper bound on the true norm; exact unless zero to precision."""
        if self.is_zero and not self.is_exact_zero:
            return NormValue(self.p, -self.val)
        return self.norm()

    def digits(self):
        if self.is_zero:
            raise InvalidParameter("zero has no leading digit")
        out, u = [], self.unit
        for _ in range(self.prec):
            u, d = divmod(u, self.p)
            out.append(d)
        return DigitExpansion(self.val, tuple(out))

    def to_rational(self):
        """The rational representative p**val * unit (0 for zeros)."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def to_json(self):
        return {"p": self.p, "prec": self.prec, "zero": self.is_zero,
                "val": self.val, "unit": self.unit}

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], data["prec"], data["val"], data["unit"])

    def __str__(self):
        if self.is_exact_zero:
            return "0"
        if self.is_zero:
            return f"O({self.p}^{self.val})"
        head = str(self.unit) if self.val == 0 else f"{self.unit}*{self.p}^{self.val}"
        return f"{head} + O({self.p}^{self.abs_prec})"

    def render(self):
        """Long-form display: power of p times the digit series."""
        label = f"p-adic(p={self.p}, N={self.prec})"
        if self.is_zero:
            return f"{label}: {self}"
        exp = self.digits()
        shown = list(exp.digits)
        while len(shown) > 1 and shown[-1] == 0:
            shown.pop()
        terms = []
        for i, d in enumerate(shown):
            if i == 0:
                terms.append(str(d))
            elif i == 1:
                terms.append(f"{d}*{self.p}")
            else:
                terms.append(f"{d}*{self.p**i}")
        series = " + ".join(terms + ["..."])
        digit_list = ",".join(str(d) for d in shown)
        return f"{label}: {self.p}^{self.val} * ({series}) = digits v={self.val} [{digit_list},...]"


def from_rational(q, p, prec=DEFAULT_PRECISION):
    return PAdicNumber.from_rational(q, p, prec)


def equal_to_precision(x, y, m):
    """True iff |x - y| <= p**(-m).

    A difference that cancelled to O(p^k) has norm 0 (see ``norm``), so
    elements that agree on every carried digit are equal at any m.
    """
    return (x - y).norm() <= NormValue(x.p, -m)
