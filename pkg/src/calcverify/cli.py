"""Command-line interface.

Subcommands: integrate, diffcheck, antideriv, solve, nodes, cordic.
Exit status 0 means success or a passing verdict, 1 a numeric failure
(failed verdict, non-convergence, non-finite evaluation), and 2 a
usage, parse, or domain error.  Numbers print with 10 significant
digits in plain mode and 17 in --json mode.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Mapping, Optional, Sequence

from . import cordic, diffcheck, expr, quadrature, solvers, tables
from .errors import CapabilityError, DomainError, NumericError, TableError


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _caret(source: str, offset: int, message: str) -> str:
    offset = max(0, min(offset, len(source)))
    return f"error: {message}\n  {source}\n  {' ' * offset}^"


def _compile(
    text: str,
    variables: Sequence[str],
    functions: Optional[Mapping[str, Callable[[float], float]]] = None,
) -> Callable[..., float]:
    try:
        tree = expr.parse(text, variables)
    except expr.ParseError as pe:
        raise _CliError(2, _caret(text, pe.offset, str(pe))) from None
    names = tuple(variables)

    def f(*values: float) -> float:
        try:
            return expr.evaluate(tree, dict(zip(names, values)), functions)
        except expr.EvalDomainError as ee:
            raise _CliError(2, _caret(text, ee.offset, str(ee))) from None

    return f


def _json_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.17g}"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_scalar(x) for x in v) + "]"
    raise TypeError(f"unsupported json value {v!r}")


def _emit(fields: dict, as_json: bool) -> None:
    if as_json:
        body = ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}" for k, v in fields.items())
        print("{" + body + "}")
        return
    for k, v in fields.items():
        if isinstance(v, bool):
            print(f"{k} {'true' if v else 'false'}")
        elif isinstance(v, float):
            print(f"{k} {v:.10g}")
        elif isinstance(v, (list, tuple)):
            print(f"{k} " + " ".join(f"{x:.10g}" for x in v))
        else:
            print(f"{k} {v}")


def _cache_path(args) -> str:
    return args.cache if args.cache else tables.default_cache_path()


def _cmd_integrate(args) -> int:
    triplets = args.axes
    if len(triplets) % 3 != 0 or not 1 <= len(triplets) // 3 <= 3:
        raise _CliError(2, "error: expected 1 to 3 axis triplets: VAR LO HI")
    names, lo, hi = [], [], []
    for k in range(0, len(triplets), 3):
        names.append(triplets[k])
        try:
            lo.append(float(triplets[k + 1]))
            hi.append(float(triplets[k + 2]))
        except ValueError:
            raise _CliError(2, f"error: bounds for {triplets[k]!r} are not numbers") from None
    f = _compile(args.expression, names)
    rule = tables.get_or_build(_cache_path(args), args.n)
    if len(names) == 1:
        value = quadrature.apply_rule(rule, f, lo[0], hi[0])
    else:
        value = quadrature.apply_rule_box(rule, f, quadrature.Box(tuple(lo), tuple(hi)))
    if args.json:
        _emit({"value": value, "n": args.n, "dims": len(names)}, True)
    else:
        print(f"{value:.10g}")
    return 0


def _cmd_diffcheck(args) -> int:
    f = _compile(args.function, [args.var])
    fprime = _compile(args.derivative, [args.var])
    report = diffcheck.verify_derivative(
        f, fprime, args.point, h=args.h, tol_abs=args.tol_abs, tol_rel=args.tol_rel
    )
    _emit(
        {
            "point": report.point,
            "h": report.h,
            "analytic": report.analytic,
            "numeric": report.numeric,
            "abs_diff": report.abs_diff,
            "rel_diff": report.rel_diff,
            "verdict": report.verdict,
        },
        args.json,
    )
    return 0 if report.verdict == "pass" else 1


def _cmd_antideriv(args) -> int:
    f = _compile(args.function, [args.var])
    antideriv = _compile(args.antiderivative, [args.var])
    report = diffcheck.verify_antiderivative(f, antideriv, args.a, args.b, n=args.n, tol=args.tol)
    _emit(
        {
            "a": report.a,
            "b": report.b,
            "ftc_value": report.ftc_value,
            "quad_value": report.quad_value,
            "n": report.n,
            "abs_diff": report.abs_diff,
            "verdict": report.verdict,
        },
        args.json,
    )
    return 0 if report.verdict == "pass" else 1


def _cmd_solve(args) -> int:
    f = _compile(args.function, [args.var])
    if args.method == "newton":
        fprime = _compile(args.fprime, [args.var]) if args.fprime else None
        result = solvers.newton_solve(
            f, args.c, args.x0, fprime=fprime, tol=args.tol, max_iters=args.max_iters
        )
    else:
        if args.x1 is None:
            raise _CliError(2, "error: the secant method requires --x1")
        result = solvers.secant_solve(
            f, args.c, args.x0, args.x1, tol=args.tol, max_iters=args.max_iters
        )
    _emit(
        {
            "root": result.root,
            "residual": result.residual,
            "iterations": result.iterations,
            "converged": result.converged,
        },
        args.json,
    )
    if not result.converged:
        print(
            f"did not converge in {result.iterations} iterations; "
            f"last iterate {result.root:.10g}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_nodes(args) -> int:
    rule = quadrature.gauss_rule(args.n)
    if args.json:
        _emit(
            {"n": rule.n, "nodes": list(rule.nodes), "weights": list(rule.weights)},
            True,
        )
    else:
        sys.stdout.write(tables.dumps_tables([rule]))
    return 0


def _cmd_cordic(args) -> int:
    table = cordic.cordic_table(args.iters)
    result = cordic.cordic_sincos(args.theta, table)
    ref_sin, ref_cos = math.sin(args.theta), math.cos(args.theta)
    _emit(
        {
            "theta": args.theta,
            "iters": args.iters,
            "sin": result.sin,
            "cos": result.cos,
            "ref_sin": ref_sin,
            "ref_cos": ref_cos,
            "sin_abs_diff": abs(result.sin - ref_sin),
            "cos_abs_diff": abs(result.cos - ref_cos),
        },
        args.json,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calcverify",
        description="Gauss-Legendre integration, derivative/antiderivative "
        "verification, root solving, and CORDIC trig.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="integrate an expression over an interval or box")
    p.add_argument("expression")
    p.add_argument(
        "axes",
        nargs="+",
        metavar="VAR LO HI",
        help="1 to 3 axis triplets, e.g. x 0 1 y 0 1",
    )
    p.add_argument("--n", type=int, default=20, help="points per axis (default 20)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cache", help="rule cache file (default $CALCVERIFY_CACHE)")
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("diffcheck", help="verify an analytic derivative at a point")
    p.add_argument("function")
    p.add_argument("derivative")
    p.add_argument("point", type=float)
    p.add_argument("--var", default="x")
    p.add_argument("--h", type=float, default=diffcheck.DEFAULT_H)
    p.add_argument("--tol-abs", type=float, default=diffcheck.DEFAULT_TOL_ABS)
    p.add_argument("--tol-rel", type=float, default=diffcheck.DEFAULT_TOL_REL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_diffcheck)

    p = sub.add_parser("antideriv", help="verify an antiderivative on an interval")
    p.add_argument("function")
    p.add_argument("antiderivative")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("--var", default="x")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--tol", type=float, default=diffcheck.DEFAULT_TOL_ABS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_antideriv)

    p = sub.add_parser("solve", help="solve f(x) = c by Newton or secant iteration")
    p.add_argument("function")
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--method", choices=("newton", "secant"), default="newton")
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--x1", type=float, help="second start (secant only)")
    p.add_argument("--fprime", help="analytic derivative expression (newton only)")
    p.add_argument("--var", default="x")
    p.add_argument("--tol", type=float, default=solvers.DEFAULT_TOL)
    p.add_argument("--max-iters", type=int, default=solvers.DEFAULT_MAX_ITERS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("nodes", help="print an n-point rule in the table file format")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nodes)

    p = sub.add_parser("cordic", help="CORDIC sine/cosine with a reference comparison")
    p.add_argument("theta", type=float)
    p.add_argument("--iters", type=int, default=cordic.DEFAULT_ITERATIONS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cordic)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse exits 2 on usage errors, 0 on --help
        return int(exit_.code) if exit_.code else 0
    try:
        return args.func(args)
    except _CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableError as exc:
        print(f"table error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
