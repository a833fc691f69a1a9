"""Command-line front end.

JSON goes to stdout and diagnostics to stderr. Commands that produce a CSV
table write it to ``--output`` and print the JSON summary to stdout; without
``--output`` the CSV is the stdout payload and the summary goes to stderr.

Options may be given as ``--key value`` or as positional ``key=value``.
Exit codes: 0 success, 1 domain or precondition failure, 2 parse error.
"""

from __future__ import annotations

import argparse
import io
import sys

from . import __version__
from .curvature import check_on_surface, curvature_sample, gauss_curvature
from .errors import GeometryError, SpecParseError
from .geometry import QuadricCenter, QuadricParaboloid
from .parsing import parse_point, parse_real, parse_surface
from .quadrics import classify, seed_point
from .revolution import ProfileSpec, profile_rows, solve_superquadric_parallel, write_profile_csv
from .serialize import dumps
from .tracer import constancy_report, project_to_curve, trace, trace_curvatures, write_trace_csv
from .verification import SUITES, run_suite


def _positive_real(text: str) -> float:
    v = parse_real(text)
    if not v > 0:
        raise SpecParseError(f"expected a positive real, got {text!r}")
    return v


def _count(text: str) -> int:
    v = parse_real(text)
    if v != int(v) or v < 1:
        raise SpecParseError(f"expected a positive integer, got {text!r}")
    return int(v)


def _emit_table(args, write, rows, summary: dict, out, err) -> None:
    # rows are fully computed before anything is written, so failures never leave a bare header
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write(fh, rows)
        print(dumps(summary), file=out)
    else:
        buf = io.StringIO()
        write(buf, rows)
        out.write(buf.getvalue())
        print(dumps(summary), file=err)


def cmd_classify(args, out, err) -> int:
    q = parse_surface(args.spec)
    if not isinstance(q, (QuadricCenter, QuadricParaboloid)):
        raise SpecParseError("classify needs a quadric-center or paraboloid spec")
    print(dumps(classify(q).as_dict()), file=out)
    return 0


def cmd_curvature(args, out, err) -> int:
    F = parse_surface(args.spec)
    p = parse_point(args.point)
    if args.cut is None:
        check_on_surface(F, p)
        print(dumps({"K": gauss_curvature(F, p)}), file=out)
    else:
        G = parse_surface(args.cut)
        print(dumps(curvature_sample(F, G, p).as_dict()), file=out)
    return 0


def cmd_trace(args, out, err) -> int:
    F = parse_surface(args.surface)
    G = parse_surface(args.cut)
    if args.start is not None:
        start = project_to_curve(F, G, parse_point(args.start))
    else:
        try:
            start = seed_point(F, G)
        except TypeError:
            raise SpecParseError("no automatic start point for these surfaces; pass --start x,y,z") from None
    tr = trace(F, G, start, args.step, args.max_steps, direction=args.direction)
    rows = trace_curvatures(F, G, tr, with_fd=not args.no_fd)
    k1 = [r[4] for r in rows]
    summary = {
        "closed": tr.closed,
        "samples": len(tr),
        "length": tr.length,
        "k1_constancy": constancy_report(k1).as_dict(),
        "max_biharmonic_residual": max(abs(r[4] - r[6]) for r in rows),
    }
    _emit_table(args, write_trace_csv, rows, summary, out, err)
    return 0


def cmd_solve_parallel(args, out, err) -> int:
    res = solve_superquadric_parallel(args.n, args.c, samples=args.samples)
    d = res.as_dict()
    print(dumps({k: d[k] for k in ("d0", "residual_at_root", "bracket", "all_brackets")}), file=out)
    return 0


def cmd_profile(args, out, err) -> int:
    spec = ProfileSpec(args.c1, args.c2)
    rows = profile_rows(spec, args.rho_lo, args.rho_hi, args.count)
    summary = {"max_ode_residual": max(abs(r[5]) for r in rows), "count": len(rows)}
    _emit_table(args, write_profile_csv, rows, summary, out, err)
    return 0


def cmd_verify(args, out, err) -> int:
    checks = run_suite(args.suite)
    passed = all(c.passed for c in checks)
    print(dumps({"suite": args.suite, "passed": passed, "checks": [c.as_dict() for c in checks]}), file=out)
    if not passed:
        failed = ", ".join(c.name for c in checks if not c.passed)
        print(f"failed checks: {failed}", file=err)
    return 0 if passed else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="biharmonic-curves", description="Curvatures and biharmonic curves of implicit surfaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="decide whether a quadric carries a proper biharmonic curve")
    s.add_argument("spec", nargs="+", help="quadric spec, e.g. quadric-center a=1 b=1 c=2 xi=1 zeta=1")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("curvature", help="K at a surface point, or the full sample on an intersection curve")
    s.add_argument("spec", nargs="+", help="surface spec")
    s.add_argument("--point", required=True, help="x,y,z")
    s.add_argument("--cut", help="second surface spec (quoted)")
    s.set_defaults(func=cmd_curvature)

    s = sub.add_parser("trace", help="trace an intersection curve and export per-sample curvatures")
    s.add_argument("--surface", required=True, help="first surface spec (quoted)")
    s.add_argument("--cut", required=True, help="second surface spec (quoted)")
    s.add_argument("--start", help="start guess x,y,z; projected onto the curve first")
    s.add_argument("--step", type=_positive_real, default=0.01)
    s.add_argument("--max-steps", type=_count, default=100000)
    s.add_argument("--direction", type=int, choices=(1, -1), default=1)
    s.add_argument("--no-fd", action="store_true", help="skip the finite-difference column")
    s.add_argument("--output", help="CSV path")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("solve-parallel", help="biharmonic parallel of the superquadric of revolution")
    s.add_argument("--n", type=_count, required=True)
    s.add_argument("--c", type=_positive_real, required=True)
    s.add_argument("--samples", type=_count, default=1024)
    s.set_defaults(func=cmd_solve_parallel)

    s = sub.add_parser("profile", help="sample the profile whose parallels are all biharmonic")
    s.add_argument("--c1", type=parse_real, default=0.0)
    s.add_argument("--c2", type=parse_real, default=0.0)
    s.add_argument("--rho-lo", type=parse_real, default=None)
    s.add_argument("--rho-hi", type=parse_real, required=True)
    s.add_argument("--count", type=_count, default=100)
    s.add_argument("--output", help="CSV path")
    s.set_defaults(func=cmd_profile)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.set_defaults(func=cmd_verify)
    return p


def _option_names(parser: argparse.ArgumentParser, command: str | None) -> set[str]:
    for action in parser._subparsers._group_actions:
        if command in action.choices:
            sp = action.choices[command]
            return {o[2:].replace("-", "_") for a in sp._actions for o in a.option_strings if o.startswith("--")}
    return set()


def normalize_argv(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Rewrite positional ``key=value`` tokens naming a subcommand option as ``--key value``."""
    if not argv:
        return argv
    names = _option_names(parser, argv[0])
    out = [argv[0]]
    for tok in argv[1:]:
        key, eq, val = tok.partition("=")
        if eq and not tok.startswith("-") and key.replace("-", "_") in names:
            out += ["--" + key.replace("_", "-"), val]
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(normalize_argv(parser, argv))
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        if getattr(args, "rho_lo", 0.0) is None:
            args.rho_lo = ProfileSpec(args.c1, args.c2).rho_min
        return args.func(args, out, err)
    except SpecParseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
