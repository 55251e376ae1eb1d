"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check produced
violations (witnesses are printed), 2 on usage or parameter errors.
"""
import argparse
import json
import random
import sys

from . import balls as ballmod
from .errors import ContractViolation, NonArchError, NonConvergence
from .fixed_point import as_point, iterate_contraction, proposition_v
from .isometry import (check_additivity, check_isometry, check_midpoint_equation,
                       check_rational_homogeneity, equidistant_points, gallery, midpoint)
from .padic import DEFAULT_PRECISION, PAdicNumber
from .parsing import parse_map, parse_point_literal, parse_radius, parse_rational, parse_space, read_sample
from .spaces import check_norm_axioms, random_rational, strict_convexity_witness, value_set_report
from .valuation import INF, TRIVIAL, absolute, check_field_axioms, padic_val

OK, VIOLATION, USAGE = 0, 1, 2


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _sample(args, space=None):
    """Explicit literals, a sample file, or K seeded random points; None if absent."""
    items = [parse_point_literal(s) for s in getattr(args, "points", None) or []]
    if getattr(args, "sample", None):
        items += read_sample(args.sample)
    if getattr(args, "random", None):
        rng = random.Random(args.seed)
        if space is None:
            items += [random_rational(rng) for _ in range(args.random)]
        else:
            items += [space.random_point(rng) for _ in range(args.random)]
    if not items:
        return None
    if space is None:
        return items
    return [as_point(space, item) for item in items]


def _space(args):
    return parse_space(args.space, args.precision)


def _report_out(args, report):
    if args.json:
        print(_dump(report.to_dict(limit=20)))
    else:
        print(f"{report.check}: {report.pairs_checked} pairs checked, {report.summary()}")
    return OK if report.passed else VIOLATION


# --- subcommands ------------------------------------------------------------

def cmd_val(args):
    base = TRIVIAL if args.trivial else args.p
    if base is None:
        raise argparse.ArgumentTypeError("give -p P or --trivial")
    rows = []
    for lit in args.points:
        q = parse_rational(lit)
        a = absolute(q, base)
        row = {"q": str(q), "abs": str(a)}
        if base != TRIVIAL:
            v = padic_val(q, base)
            row["val"] = "inf" if v == INF else v
        rows.append(row)
    if args.json:
        print(_dump(rows))
    else:
        for row in rows:
            tail = f" (v={row['val']})" if "val" in row else ""
            print(f"|{row['q']}|_{base} = {row['abs']}{tail}")
    return OK


_PADIC_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}


def cmd_padic(args):
    operands = [PAdicNumber.from_rational(parse_rational(s), args.p, args.precision) for s in args.operands]
    want = 1 if args.op in ("show", "neg") else 2
    if len(operands) != want:
        raise argparse.ArgumentTypeError(f"{args.op} takes {want} operand(s)")
    if args.op == "show":
        result = operands[0]
    elif args.op == "neg":
        result = -operands[0]
    else:
        result = getattr(operands[0], _PADIC_OPS[args.op])(operands[1])
    if args.json:
        out = result.to_json()
        out["digits"] = None if result.is_zero else list(result.digits().digits)
        out["abs_prec"] = None if result.is_exact_zero else result.abs_prec
        print(_dump(out))
    else:
        print(result.render())
    return OK


def cmd_axioms(args):
    if args.space:
        space = _space(args)
        scalars = [parse_rational(s) for s in args.scalars.split(",")] if args.scalars else None
        report = check_norm_axioms(space, _sample(args, space), scalars)
        code = _report_out(args, report)
        if not args.json:
            vs = value_set_report(space, _sample(args, space))
            print("value set: {" + ", ".join(str(v) for v in sorted(vs.attained)) + "}"
                  + (" matches field values" if vs.matches else " differs from field values"))
        return code
    base = TRIVIAL if args.trivial else args.p
    if base is None:
        raise argparse.ArgumentTypeError("give -p P, --trivial or --space")
    sample = _sample(args)
    if sample is None:
        rng = random.Random(args.seed)
        sample = list(range(101)) + [random_rational(rng) for _ in range(200)]
    return _report_out(args, check_field_axioms(base, sample))


def cmd_convexity(args):
    space = _space(args)
    sample = _sample(args, space)
    w = strict_convexity_witness(space, sample)
    scope = "exhaustive" if sample is None else "sample"
    if args.json:
        print(_dump({"space": str(space), "scope": scope,
                     "witness": None if w is None else [space.format(x) for x in w]}))
    elif w is None:
        print(f"no witness ({scope}){': model certified strictly convex' if sample is None else ''}")
    else:
        x, y = w
        print(f"witness: x={space.format(x)}, y={space.format(y)}: ||x|| = ||y|| = ||x+y|| = {space.norm(x)}, x != y")
    return OK if w is None else VIOLATION


def cmd_isometry(args):
    space = _space(args)
    return _report_out(args, check_isometry(parse_map(args.map), space, _sample(args, space)))


def cmd_additivity(args):
    space = _space(args)
    f = parse_map(args.map)
    sample = _sample(args, space)
    reports = []
    if args.check in ("additive", "all"):
        reports.append(check_additivity(f, space, sample))
    if args.check in ("midpoint", "all"):
        reports.append(check_midpoint_equation(f, space, sample))
    if args.check in ("homogeneity", "all"):
        scalars = [parse_rational(s) for s in (args.scalars or "2,3,-1,1/2").split(",")]
        pts = sample if sample is not None else list(space.elements())
        reports.append(check_rational_homogeneity(f, space, pts, scalars))
    if args.json:
        print(_dump([r.to_dict(limit=20) for r in reports]))
    else:
        for r in reports:
            print(f"{r.check}: {r.pairs_checked} cases, {r.summary()}")
    return OK if all(r.passed for r in reports) else VIOLATION


def cmd_lemma(args):
    space = _space(args)
    x, y = (as_point(space, parse_rational(s)) for s in (args.x, args.y))
    pts = equidistant_points(space, x, y)
    m = midpoint(space, x, y) if space.two_is_unit else None
    if args.json:
        print(_dump({"x": x, "y": y, "distance": str(space.dist(x, y)), "points": pts,
                     "cardinality": len(pts), "midpoint": m}))
    else:
        print(f"distance ||x - y|| = {space.dist(x, y)}")
        print(f"equidistant points ({len(pts)}): {pts}")
        if m is not None:
            print(f"midpoint (x+y)/2 = {m} ({'in' if m in pts else 'NOT in'} the set)")
        print("unique: " + ("yes" if len(pts) == 1 else "no (model is not strictly convex)"))
    return OK if len(pts) == 1 else VIOLATION


def cmd_gallery(args):
    sections = gallery(seed=args.seed)
    if args.json:
        print(_dump([s.to_dict() for s in sections]))
    else:
        for s in sections:
            print(f"== {s.title}: {s.map} on {s.space}")
            print(s.line())
    return OK if all(s.confirmed for s in sections) else VIOLATION


def _fixed_point_json(space, res, extra):
    out = {"v": space.format(res.v), "iterations": res.iterations, "residual_exp": res.residual_exp,
           "residual_exps": [None if r.is_zero else -r.exp for r in res.residuals]}
    out.update(extra)
    return out


def _contract_failure(args, exc):
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    if args.json:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}))
    return VIOLATION


def cmd_fixpoint(args):
    space = _space(args)
    h = parse_map(args.map)
    x0 = as_point(space, parse_point_literal(args.x0))
    target = args.target if args.target is not None else max(getattr(space, "N", 16) - 4, 1)
    try:
        res = iterate_contraction(h, space, x0, target, args.max_iter)
    except (ContractViolation, NonConvergence) as exc:
        return _contract_failure(args, exc)
    out = _fixed_point_json(space, res, {"target_exp": target})
    if args.json:
        print(_dump(out))
    else:
        print(f"v = {out['v']} after {res.iterations} iterations, residual {res.residual}")
    return OK


def cmd_proposition(args):
    space = _space(args)
    f = parse_map(args.map)
    starts = [parse_point_literal(s) for s in args.starts.split(";")] if args.starts else None
    try:
        res = proposition_v(f, space, parse_point_literal(args.u), args.k, args.target, starts)
    except (ContractViolation, NonConvergence) as exc:
        return _contract_failure(args, exc)
    out = _fixed_point_json(space, res, {"verified": res.verified, "starts_agreed": res.starts_agreed})
    if args.json:
        print(_dump(out))
    else:
        print(f"v = {out['v']} after {res.iterations} iterations, residual {res.residual}")
        print(f"identity verified: {res.verified}; starts agree: {res.starts_agreed}")
    return OK if res.verified and res.starts_agreed else VIOLATION


def cmd_balls(args):
    space = _space(args)
    bs = []
    for spec in args.ball:
        center, sep, radius = spec.rpartition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"ball must be CENTER:RADIUS, got {spec!r}")
        bs.append(ballmod.Ball(space, as_point(space, parse_point_literal(center)), parse_radius(radius, space)))
    if args.chain or len(bs) != 2:
        common = ballmod.chain_intersection(bs)
        if args.json:
            print(_dump({"balls": [str(b) for b in bs], "intersection": common}))
        else:
            print(f"intersection of {len(bs)} balls: {common}")
        return OK if common else VIOLATION
    rel = ballmod.ball_relation(*bs)
    if args.json:
        print(_dump({"balls": [str(b) for b in bs], "relation": rel.name}))
    else:
        print(f"{bs[0]} vs {bs[1]}: {rel.value}")
    return OK


# --- parser ---------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="p-adic digits N")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled modes")

    sampled = argparse.ArgumentParser(add_help=False)
    sampled.add_argument("points", nargs="*", help="rational literals (comma-separated for vectors)")
    sampled.add_argument("--sample", help="file of newline-delimited literals")
    sampled.add_argument("--random", type=int, help="add K seeded random points")

    parser = argparse.ArgumentParser(prog="nonarch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("val", parents=[common], help="valuations and absolute values")
    p.add_argument("-p", type=int)
    p.add_argument("--trivial", action="store_true")
    p.add_argument("points", nargs="+")
    p.set_defaults(func=cmd_val)

    p = sub.add_parser("padic", parents=[common], help="truncated p-adic arithmetic")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("op", choices=["show", "neg", "add", "sub", "mul", "div"])
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("axioms", parents=[common, sampled], help="field or norm axioms")
    p.add_argument("-p", type=int)
    p.add_argument("--trivial", action="store_true")
    p.add_argument("--space")
    p.add_argument("--scalars", help="comma-separated rationals for homogeneity")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("convexity", parents=[common, sampled], help="strict convexity witness search")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_convexity)

    p = sub.add_parser("isometry", parents=[common, sampled], help="isometry check")
    p.add_argument("--space", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("additivity", parents=[common, sampled], help="additivity, midpoint, homogeneity")
    p.add_argument("--space", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--check", choices=["additive", "midpoint", "homogeneity", "all"], default="additive")
    p.add_argument("--scalars")
    p.set_defaults(func=cmd_additivity)

    p = sub.add_parser("lemma", parents=[common], help="points equidistant from x and y")
    p.add_argument("--space", required=True)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("gallery", parents=[common], help="both counterexamples end to end")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("fixpoint", parents=[common], help="iterate a contraction")
    p.add_argument("--space", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--x0", default="0")
    p.add_argument("--target", type=int)
    p.add_argument("--max-iter", type=int, default=100)
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("proposition", parents=[common], help="solve f(u)+f(v) = f((u+v)/k)")
    p.add_argument("--space", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--starts", help="semicolon-separated start points (default 0;5)")
    p.set_defaults(func=cmd_proposition)

    p = sub.add_parser("balls", parents=[common], help="ball relations and chain intersections")
    p.add_argument("--space", required=True)
    p.add_argument("--ball", action="append", required=True, help="CENTER:RADIUS, e.g. 0:3^-1")
    p.add_argument("--chain", action="store_true")
    p.set_defaults(func=cmd_balls)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NonArchError, argparse.ArgumentTypeError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
