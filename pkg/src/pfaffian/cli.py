"""Command-line front end.

Subcommands: ``classify``, ``plan``, ``verify``, ``cartan``, ``legendrian``
and ``reach``. Reports go to stdout, diagnostics to stderr. Exit codes::

    0  success / verified
    1  verification failed
    2  input error
    3  missing obligation (cube-root hint)
    4  internal limit (degree cap)
"""

import argparse
import json
import sys

import numpy as np

from . import fixtures
from .errors import (
    DegreeOverflowError,
    HintRequired,
    PfaffianError,
    TangencyError,
)
from .exterior import DEFAULT_DEGREE_CAP, VarSpace, degree_cap, pullback
from .grammar import (
    format_curve,
    parse_curve,
    parse_field,
    parse_form,
    parse_point,
    parse_poly,
    parse_vars,
)
from .integrability import bracket_defect, cartan_terms, contact_class, frobenius_form
from .numeric_reach import NumDist, reach_sample
from .planner import (
    Strategy,
    legendrian_from_S,
    plan_between,
    residual,
    standard_form,
    standard_space,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_HINT = 3
EXIT_LIMIT = 4


class _InputError(Exception):
    pass


def _num(x):
    return f"{x:.17g}"


def _form_arg(args):
    text = args.form_text if args.form_text is not None else args.form
    if text is None:
        raise _InputError("no form given (positional argument or --form)")
    return parse_form(text, parse_vars_arg(args.vars)), text


def parse_vars_arg(text):
    return parse_vars(text)


def _one_form(form):
    if form.degree != 1:
        raise _InputError(f"expected a 1-form, got a form of degree {form.degree}")
    return form


# commands return (lines, result, verified, exit_code)

def cmd_classify(args):
    omega, text = _form_arg(args)
    omega = _one_form(omega)
    report = contact_class(omega)
    frob = frobenius_form(omega)
    lines = [
        f"form: {omega}",
        f"frobenius: {frob}",
        f"k = {report.k}",
        f"integrable: {str(report.integrable).lower()}",
        f"witness: {report.witness}",
    ]
    result = {"form": str(omega), "frobenius": str(frob), "k": report.k,
              "integrable": report.integrable, "witness": str(report.witness)}
    return lines, result, True, EXIT_OK


def cmd_plan(args):
    points = [p for p in args.points if p not in ("->", "→", "to")]
    if len(points) != 2:
        raise _InputError("plan needs a start point and an end point")
    p0, p1 = (parse_point(p) for p in points)
    hint = parse_point(args.hint)[0] if args.hint is not None else None
    plan = plan_between(p0, p1, args.strategy, cube_root_hint=hint, numeric=args.numeric)
    lines = [f"strategy: {Strategy(args.strategy).value}",
             "form: x*dy - y*dx - dz",
             f"links: {len(plan)}"]
    links = []
    residuals = plan.residuals()
    for k, (link, res) in enumerate(zip(plan.links, residuals), 1):
        lines.append(f"# link {k}: {_fmt_point(link.start)} -> {_fmt_point(link.end)}")
        lines.extend(format_curve(link.map, link.t_start, link.t_end).rstrip("\n").splitlines())
        lines.append(f"# residual: {res}")
        links.append({
            "map": {n: str(c) for n, c in zip(link.map.target.names, link.map.components)},
            "t_start": str(link.t_start), "t_end": str(link.t_end),
            "start": [str(c) for c in link.start], "end": [str(c) for c in link.end],
            "residual": str(res),
        })
    verified = all(r.is_zero() for r in residuals)
    result = {"links": links, "start": [str(c) for c in plan.start],
              "end": [str(c) for c in plan.end]}
    if args.numeric:
        err = max(abs(complex(a) - complex(b)) for a, b in zip(plan.end, p1))
        lines.append(f"endpoint error: {_num(err)}")
        result["endpoint_error"] = err
    lines.append("VERIFIED: all residuals ≡ 0" if verified else "FAILED: nonzero residual")
    return lines, result, verified, EXIT_OK if verified else EXIT_FAILED


def _fmt_point(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


def cmd_verify(args):
    omega, _ = _form_arg(args)
    omega = _one_form(omega)
    try:
        if args.curve_file == "-":
            text = sys.stdin.read()
        else:
            with open(args.curve_file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read curve file: {exc}") from None
    parsed = parse_curve(text, omega.space)
    res = residual(omega, parsed.map)
    ok = res.is_zero()
    lines = ["ADMISSIBLE" if ok else "NOT ADMISSIBLE", f"residual: {res}"]
    result = {"residual": str(res), "admissible": ok,
              "start": [str(c) for c in parsed.map((parsed.t_start,))],
              "end": [str(c) for c in parsed.map((parsed.t_end,))]}
    return lines, result, ok, EXIT_OK if ok else EXIT_FAILED


def cmd_cartan(args):
    space = parse_vars_arg(args.vars)
    omega = _one_form(parse_form(args.form, space))
    X = parse_field(args.X, space)
    Y = parse_field(args.Y, space)
    lhs, x_wy, y_wx, w_xy = cartan_terms(omega, X, Y)
    res = lhs - x_wy + y_wx + w_xy
    try:
        defect = str(bracket_defect(omega, X, Y))
    except TangencyError as exc:
        defect = None
        defect_note = str(exc)
    lines = [
        f"dω(X,Y) = {lhs}",
        f"Xω(Y) = {x_wy}",
        f"Yω(X) = {y_wx}",
        f"ω([X,Y]) = {w_xy}",
        f"residual: {res}",
        f"bracket_defect: {defect}" if defect is not None else f"bracket_defect: n/a ({defect_note})",
    ]
    ok = res.is_zero()
    result = {"d_omega_XY": str(lhs), "X_omega_Y": str(x_wy), "Y_omega_X": str(y_wx),
              "omega_bracket": str(w_xy), "residual": str(res), "bracket_defect": defect}
    return lines, result, ok, EXIT_OK if ok else EXIT_FAILED


def _key_values(tokens):
    out = {}
    for tok in tokens:
        key, eq, value = tok.partition("=")
        if not eq:
            raise _InputError(f"expected key=value, got {tok!r}")
        out[key.strip()] = value.strip()
    return out


def _indices(text):
    if not text:
        return []
    try:
        return [int(k) for k in text.replace(" ", "").split(",") if k]
    except ValueError:
        raise _InputError(f"bad index list {text!r}") from None


def cmd_legendrian(args):
    kv = _key_values(args.options)
    unknown = set(kv) - {"I", "J", "n"}
    if unknown:
        raise _InputError(f"unknown options {sorted(unknown)}; use I=, J=, n=")
    try:
        n = int(kv.get("n", 1))
    except ValueError:
        raise _InputError(f"bad n {kv['n']!r}") from None
    if n < 1:
        raise _InputError("n must be at least 1")
    I = _indices(kv.get("I", ""))
    partition = (I, _indices(kv["J"])) if "J" in kv else I
    space = standard_space(n)
    S = parse_poly(args.S, space)
    try:
        chart = legendrian_from_S(S, partition, n)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    pulled = pullback(chart.map, standard_form(n))
    lines = [f"parameters: {chart.map.source}",
             f"I = {list(chart.partition[0])}, J = {list(chart.partition[1])}"]
    lines += [f"{name} = {c}" for name, c in zip(chart.map.target.names, chart.map.components)]
    lines.append(f"pullback of standard form: {pulled}")
    ok = pulled.is_zero()
    result = {"parameters": list(chart.map.source.names), "I": list(chart.partition[0]),
              "J": list(chart.partition[1]),
              "chart": {n_: str(c) for n_, c in zip(chart.map.target.names, chart.map.components)},
              "pullback": str(pulled)}
    return lines, result, ok, EXIT_OK if ok else EXIT_FAILED


def cmd_reach(args):
    if args.fixture and args.form_list:
        raise _InputError("give either a fixture name or --form, not both")
    if args.fixture:
        try:
            fx = fixtures.get_fixture(args.fixture)
        except KeyError as exc:
            raise _InputError(exc.args[0]) from None
        dist, p0 = fx.dist, fx.p0
        names = {fx.invariant_name: fx.invariant}
        space = dist.complex_space or VarSpace(dist.names)
    elif args.form_list:
        space = parse_vars_arg(args.vars)
        forms = [_one_form(parse_form(f, space)) for f in args.form_list]
        dist = NumDist.realify(forms) if args.realify else NumDist.real(forms)
        p0 = (0.0,) * dist.dim
        names = {}
    else:
        raise _InputError("reach needs a fixture name or --form")
    if args.p0 is not None:
        try:
            p0 = tuple(float(v) for v in args.p0.split(","))
        except ValueError:
            raise _InputError(f"bad start point {args.p0!r}") from None
        if len(p0) != dist.dim:
            raise _InputError(f"start point needs {dist.dim} real coordinates")
    invariant = None
    if args.invariant is not None:
        invariant = names.get(args.invariant) or parse_poly(args.invariant, space)
    radius = args.horizon
    if args.n < 1 or radius <= 0 or args.step <= 0:
        raise _InputError("--n, --horizon and --step must be positive")
    summary = reach_sample(dist, p0, args.n, radius, args.seed, invariant, h=args.step)
    lines = [
        f"coordinates: {','.join(dist.names)}",
        f"p0: {','.join(_num(v) for v in summary.p0)}",
        f"samples: {summary.n_ok} of {summary.n_requested} (seed {summary.seed})",
        f"radius: {_num(radius)}",
        f"spread: {_num(summary.spread)}",
    ]
    if invariant is not None:
        lines.append(f"escape: {_num(summary.escape)}")
    for i, note in summary.skipped:
        print(f"sample {i} skipped: {note}", file=sys.stderr)
    if args.cloud:
        np.savetxt(args.cloud, summary.points, fmt="%.17g", delimiter=",",
                   header=",".join(dist.names), comments="")
        lines.append(f"cloud written to {args.cloud}")
    result = {"coordinates": list(dist.names), "p0": summary.p0.tolist(),
              "n": summary.n_ok, "skipped": [i for i, _ in summary.skipped],
              "spread": summary.spread,
              "escape": summary.escape if invariant is not None else None}
    return lines, result, True, EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP,
                        help="polynomial degree cap (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="pfaffian",
        description="Exact exterior calculus and reachability for hyperplane distributions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="contact class of a 1-form")
    p.add_argument("form_text", nargs="?", metavar="FORM")
    p.add_argument("--form")
    p.add_argument("--vars", default="x,y,z")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("plan", parents=[common], help="admissible broken line between points")
    p.add_argument("points", nargs="+", metavar="POINT",
                   help="start and end, e.g. 0,0,0 1,1,1 (use -- before negative points)")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="single")
    p.add_argument("--hint", help="cube root t1 with t1^3 = 3*z of the translated target")
    p.add_argument("--numeric", action="store_true",
                   help="use the principal cube root when no hint is given")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("verify", parents=[common], help="check a curve file against a form")
    p.add_argument("form_text", nargs="?", metavar="FORM")
    p.add_argument("curve_file", nargs="?", metavar="CURVE_FILE")
    p.add_argument("--form")
    p.add_argument("--vars", default="x,y,z")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cartan", parents=[common], help="Cartan identity and bracket defect")
    p.add_argument("form")
    p.add_argument("X")
    p.add_argument("Y")
    p.add_argument("--vars", default="x,y,z")
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("legendrian", parents=[common], help="chart from a generating function")
    p.add_argument("S")
    p.add_argument("options", nargs="*", metavar="KEY=VALUE", help="I=1,2  J=3  n=3")
    p.set_defaults(func=cmd_legendrian)

    p = sub.add_parser("reach", parents=[common], help="sample admissible paths numerically")
    p.add_argument("fixture", nargs="?", help="integrable | contact | sphere")
    p.add_argument("--form", dest="form_list", action="append", default=[])
    p.add_argument("--vars", default="x,y,z")
    p.add_argument("--realify", action="store_true", help="treat the variables as complex")
    p.add_argument("--p0")
    p.add_argument("--n", type=int, default=fixtures.DICHOTOMY_N)
    p.add_argument("--seed", type=int, default=fixtures.DICHOTOMY_SEED)
    p.add_argument("--step", type=float, default=fixtures.DICHOTOMY_STEP)
    p.add_argument("--horizon", type=float, default=fixtures.DICHOTOMY_RADIUS,
                   help="path length bound (sampling radius)")
    p.add_argument("--invariant")
    p.add_argument("--cloud", help="write endpoint cloud as comma-separated text")
    p.set_defaults(func=cmd_reach)
    return parser


def _inputs(args):
    skip = {"func", "json"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "plan":
        # argparse would read "->" as an option
        argv = [a for a in argv if a not in ("->", "→")]
    args = parser.parse_args(argv)
    if args.command == "verify" and args.curve_file is None and args.form is not None:
        args.curve_file, args.form_text = args.form_text, None
    if args.command == "verify" and args.curve_file is None:
        parser.error("verify needs a form and a curve file")
    lines, result, verified = [], None, False
    try:
        with degree_cap(args.max_degree):
            lines, result, verified, code = args.func(args)
    except HintRequired as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_HINT
    except DegreeOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_LIMIT
    except (_InputError, PfaffianError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    if args.json:
        print(json.dumps({"command": args.command, "inputs": _inputs(args), "result": result,
                          "verified": verified, "exit_code": code}, indent=2, default=str))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
