"""Command-line front end.

Subcommands: construct (one four-point construction), iterate (polygon
trajectories), verify (randomized exact certification campaigns), moduli
(chart coordinates and regularity class), julia (escape-time renders).

Exit codes: 0 success, 2 parse/usage error, 3 geometric degeneracy,
4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from fractions import Fraction

from .construction import cross_axis_frame, lambda_point, polygon_orbit
from .julia import (
    DEFAULT_WINDOW,
    JuliaConfig,
    render,
    stats_line,
    write_image,
)
from .moduli import classify, moduli_coords
from .polyfile import format_polygon, parse_polygon
from .projective import DegenerateConfiguration, HPoint
from .scalars import (
    FLOAT,
    PHI,
    PSI,
    ProjParam,
    QSqrt5,
    parse_exact,
    rational,
)
from .verify import format_report, run_verification


def parse_lambda(text: str, field) -> ProjParam:
    """Parse a --lambda value: `phi`, `psi`, `inf`, a rational or exact
    literal, or a decimal.  In the exact model decimals are read as
    exact decimal fractions (0.2 means 1/5)."""
    t = text.strip()
    if t in ("inf", "infinity"):
        return ProjParam.infinity()
    if t == "phi":
        return ProjParam(field.scalar(PHI))
    if t == "psi":
        return ProjParam(field.scalar(PSI))
    if field.name == "exact":
        try:
            return ProjParam(parse_exact(t))
        except ValueError:
            pass
        try:
            frac = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse exact lambda value {text!r}") from None
        return ProjParam(QSqrt5(rational(frac.numerator, frac.denominator)))
    try:
        return ProjParam(float(parse_exact(t)))
    except ValueError:
        pass
    try:
        value = float(t)
    except ValueError:
        raise ValueError(f"cannot parse lambda value {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"lambda must be finite or the literal 'inf', got {text!r}")
    return ProjParam(value)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_polygon(args):
    """Parse the input polygon and reconcile its field tag with --field.

    An exact file may be evaluated in the float model; the reverse
    lift is rejected."""
    file_field, verts = parse_polygon(_read_text(args.input))
    flag = getattr(args, "field", None)
    if flag is None or flag == file_field.name:
        return file_field, verts
    if flag == "float" and file_field.name == "exact":
        converted = tuple(HPoint(*(float(c) for c in v)) for v in verts)
        return FLOAT, converted
    raise ValueError("cannot lift a float polygon into the exact model")


def _fmt_point(field, p) -> str:
    return " ".join(field.text(c) for c in p)


def cmd_construct(args) -> int:
    field, verts = _load_polygon(args)
    if len(verts) != 4:
        raise ValueError(f"construct needs exactly 4 vertices, got {len(verts)}")
    lam = parse_lambda(args.lam, field)
    frame = cross_axis_frame(field, *verts)
    result = lambda_point(field, *verts, lam)
    print(f"frame_zero {_fmt_point(field, frame.zero_point)}")
    print(f"frame_unit {_fmt_point(field, frame.unit_point)}")
    print(f"frame_infinity {_fmt_point(field, frame.infinity_point)}")
    print(f"result {_fmt_point(field, result)}")
    return 0


def cmd_iterate(args) -> int:
    field, verts = _load_polygon(args)
    lam = parse_lambda(args.lam, field)
    if args.steps < 0:
        raise ValueError("--steps must be nonnegative")
    result = polygon_orbit(field, verts, lam, args.steps, args.offset)
    sys.stdout.write("\n".join(format_polygon(field, p) for p in result.polygons))
    if not result.completed:
        print(
            f"error: degenerate at step {result.failed_step}: {result.failure}",
            file=sys.stderr,
        )
        return 3
    return 0


def cmd_verify(args) -> int:
    if args.field != "exact":
        raise ValueError("verification runs in the exact model only")
    if args.trials < 0:
        raise ValueError("--trials must be nonnegative")
    report = run_verification(args.lam, args.trials, args.seed, args.bound)
    for line in format_report(report):
        print(line)
    return 0


def cmd_moduli(args) -> int:
    field, verts = _load_polygon(args)
    if len(verts) != 5:
        raise ValueError(f"moduli needs exactly 5 vertices, got {len(verts)}")
    point = moduli_coords(field, verts)
    verdict = classify(field, verts)
    if point.chart_ok:
        print(f"moduli {field.text(point.x)} {field.text(point.y)}")
    else:
        print("moduli undefined")
    print(f"chart {'ok' if point.chart_ok else 'degenerate'}")
    line = f"class {verdict.kind}"
    if verdict.relabeling is not None:
        line += f" relabeling {','.join(str(i) for i in verdict.relabeling)}"
    print(line)
    return 0


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("--window needs 4 comma-separated numbers: x0,x1,y0,y1")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad --window value {text!r}") from None


def _parse_size(text: str):
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if m is None:
        raise ValueError(f"--size must look like 200x200, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_julia(args) -> int:
    lam = parse_lambda(args.lam, FLOAT)
    window = _parse_window(args.window) if args.window else DEFAULT_WINDOW
    width, height = _parse_size(args.size)
    cfg = JuliaConfig(
        lam=lam,
        window=window,
        width=width,
        height=height,
        max_iter=args.max_iter,
        epsilon=args.epsilon,
    )
    cfg.validate()
    result = render(cfg)
    write_image(result, args.out)
    print(stats_line(args.lam, result.stats))
    return 0


def _add_field_flag(parser, default=None):
    parser.add_argument(
        "--field",
        choices=("exact", "float"),
        default=default,
        help="scalar model (default: the input file's field tag)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentalab",
        description="projective constructions, pentagon iterations, exact "
        "regularity certificates and escape-time moduli renders",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="apply the four-point construction once")
    p.add_argument("input", help="4-vertex polygon file ('-' for stdin)")
    p.add_argument("--lambda", dest="lam", required=True, help="line parameter")
    _add_field_flag(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("iterate", help="run the polygon iteration")
    p.add_argument("input", help="polygon file with at least 4 vertices ('-' for stdin)")
    p.add_argument("--lambda", dest="lam", required=True, help="line parameter")
    p.add_argument("--steps", type=int, default=1, help="iteration count (default 1)")
    p.add_argument("--offset", type=int, default=1, help="window offset (default 1)")
    _add_field_flag(p)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("verify", help="randomized exact verification campaign")
    p.add_argument("--lambda", dest="lam", required=True, choices=("phi", "psi"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--bound", type=int, default=10, help="coordinate bound (default 10)")
    p.add_argument("--field", choices=("exact", "float"), default="exact")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("moduli", help="chart coordinates and regularity class")
    p.add_argument("input", help="5-vertex polygon file ('-' for stdin)")
    _add_field_flag(p)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("julia", help="render an escape-time image over moduli space")
    p.add_argument("--lambda", dest="lam", required=True, help="line parameter")
    p.add_argument("--window", default=None, help="x0,x1,y0,y1 (default: centered on the regular class)")
    p.add_argument("--size", default="200x200", help="WxH pixels (default 200x200)")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--epsilon", type=float, default=1e-6)
    p.add_argument("--out", required=True, help="output PPM path")
    p.set_defaults(func=cmd_julia)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateConfiguration as exc:
        print(f"error: degenerate configuration: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
