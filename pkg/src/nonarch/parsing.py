"""Text grammars: rational literals, space descriptors, map specs, sample files.

    rational   -?DIGITS(/DIGITS)?          e.g. -3/8
    space      qp:p=3,N=8,dim=2 | trivial | model:p=3,N=4 | rat:p=2
    map        affine:a=1/3,b=2 | cube | q2inv | hensel:p=3,s=0,0,1
               | translate:b=5 | id | compose:[MAP;MAP;...]
    radius     0 | 1 | P^E                 e.g. 3^-1
"""
from fractions import Fraction
import re

from .errors import InvalidParameter
from .maps import IDENTITY, Affine, Compose, Cube, HenselPerturb, Q2Inversion, Translation
from .padic import DEFAULT_PRECISION
from .spaces import FiniteModel, QpVector, RationalLine, TrivialLine
from .valuation import TRIVIAL, NormValue

_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")
_RADIUS = re.compile(r"(\d+)\^(-?\d+)")


def parse_rational(text):
    s = text.strip()
    if not _RATIONAL.fullmatch(s):
        raise InvalidParameter(f"malformed rational literal {text!r}")
    q = s.split("/")
    if len(q) == 2 and int(q[1]) == 0:
        raise InvalidParameter(f"zero denominator in {text!r}")
    return Fraction(s)


def read_sample(path):
    """Newline-delimited rational literals; blank lines and # comments ignored."""
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                out.append(parse_point_literal(line))
            except InvalidParameter as exc:
                raise InvalidParameter(f"{path}:{lineno}: {exc}") from None
    return out


def parse_point_literal(text):
    """A rational, or a comma-separated tuple of rationals for vectors."""
    parts = text.split(",")
    if len(parts) == 1:
        return parse_rational(parts[0])
    return [parse_rational(p) for p in parts]


def _params(body, allowed):
    params = {}
    if not body:
        return params
    for item in body.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in allowed:
            raise InvalidParameter(f"unexpected parameter {item!r}; expected {sorted(allowed)}")
        params[key] = value.strip()
    return params


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise InvalidParameter(f"missing parameter {key}")
        return default
    value = params[key]
    if not re.fullmatch(r"\d+", value):
        raise InvalidParameter(f"{key} must be a non-negative integer, got {value!r}")
    return int(value)


def parse_space(text, precision=DEFAULT_PRECISION):
    kind, _, body = text.strip().partition(":")
    if kind == "trivial" and not body:
        return TrivialLine()
    if kind == "qp":
        params = _params(body, {"p", "N", "dim"})
        return QpVector(_int(params, "p"), _int(params, "N", precision), _int(params, "dim", 1))
    if kind == "model":
        params = _params(body, {"p", "N"})
        return FiniteModel(_int(params, "p"), _int(params, "N"))
    if kind == "rat":
        return RationalLine(_int(_params(body, {"p"}), "p"))
    raise InvalidParameter(f"unknown space descriptor {text!r}")


def _split_top(body):
    depth, start, parts = 0, 0, []
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise InvalidParameter(f"unbalanced brackets in {body!r}")
        elif ch == ";" and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    if depth:
        raise InvalidParameter(f"unbalanced brackets in {body!r}")
    parts.append(body[start:])
    return parts


def parse_map(text):
    text = text.strip()
    kind, _, body = text.partition(":")
    if kind in ("id", "identity") and not body:
        return IDENTITY
    if kind == "cube" and not body:
        return Cube()
    if kind == "q2inv" and not body:
        return Q2Inversion()
    if kind == "affine":
        params = _params(body, {"a", "b"})
        if "a" not in params:
            raise InvalidParameter("affine needs a=")
        return Affine(parse_rational(params["a"]), parse_rational(params.get("b", "0")))
    if kind == "translate":
        params = _params(body, {"b"})
        return Translation(parse_rational(params.get("b", "0")))
    if kind == "hensel":
        m = re.fullmatch(r"p=(\d+),s=(-?\d+(?:,-?\d+)*)", body.replace(" ", ""))
        if not m:
            raise InvalidParameter(f"hensel expects p=P,s=C0,C1,...; got {body!r}")
        return HenselPerturb(int(m.group(1)), tuple(int(c) for c in m.group(2).split(",")))
    if kind == "compose":
        if not (body.startswith("[") and body.endswith("]")):
            raise InvalidParameter(f"compose expects [MAP;MAP;...], got {body!r}")
        return Compose(tuple(parse_map(part) for part in _split_top(body[1:-1])))
    raise InvalidParameter(f"unknown map spec {text!r}")


def parse_radius(text, space):
    s = text.strip()
    if s == "0":
        return NormValue.zero(space.base)
    if s == "1":
        return NormValue(space.base, 0)
    m = _RADIUS.fullmatch(s)
    if not m:
        raise InvalidParameter(f"malformed radius {text!r}; use 0, 1 or P^E")
    base = int(m.group(1))
    if space.base == TRIVIAL or base != space.base:
        raise InvalidParameter(f"radius {text!r} is not a norm value of {space}")
    return NormValue(base, int(m.group(2)))
