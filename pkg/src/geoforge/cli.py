"""``geoforge`` command line.

Exit codes: 0 success, 1 assertion/property failure, 2 script parse error,
3 geometric error, 4 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import dsl
from .errors import GeometryError
from .kernel import DEFAULT_TOL, Backend, Point, Triangle, tolerance
from .naka import naka_report
from .numeric import parse_rational
from .svg import load_style, render_svg
from .verify import run_verification

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_USAGE = 4

STYLE_ENV = "GEOFORGE_STYLE"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    backend: Backend = Backend.EXACT
    tolerance: float = DEFAULT_TOL
    seed: int = 0
    iterations: int = 1000

    def __post_init__(self):
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")
        if self.iterations < 1:
            raise UsageError("iterations must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")


def _config(args) -> RunConfig:
    backend = Backend(getattr(args, "backend", "exact"))
    tol = getattr(args, "tol", None)
    if tol is not None and backend is not Backend.FLOAT:
        raise UsageError("--tol requires --backend float")
    return RunConfig(
        backend=backend,
        tolerance=DEFAULT_TOL if tol is None else tol,
        seed=getattr(args, "seed", 0),
        iterations=getattr(args, "iterations", 1),
    )


def parse_triangle(text: str, backend: Backend) -> Triangle:
    """Parse ``"x1,y1 x2,y2 x3,y3"``.  Raises UsageError or DegenerateInputError."""
    parts = text.split()
    if len(parts) != 3:
        raise UsageError(f"expected three points 'x,y', got {len(parts)}")
    pts = []
    for part in parts:
        coords = part.split(",")
        if len(coords) != 2:
            raise UsageError(f"cannot parse point {part!r}")
        try:
            if backend is Backend.EXACT:
                x, y = (parse_rational(c) for c in coords)
            else:
                x, y = (float(Fraction(c)) for c in coords)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse point {part!r}: {exc}") from None
        pts.append(Point(x, y))
    return Triangle(*pts)


def cmd_naka(args) -> int:
    cfg = _config(args)
    with tolerance(cfg.tolerance):
        try:
            t = parse_triangle(" ".join(args.triangle), cfg.backend)
        except GeometryError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_GEOMETRY
        report = naka_report(t)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def _evaluate_file(path, cfg: RunConfig):
    """Parse and evaluate a script; returns (result, exit code or None)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        script = dsl.parse(text)
    except dsl.DslError as exc:
        print(f"{path}: parse error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE
    try:
        return dsl.evaluate(script, cfg.backend, cfg.tolerance), None
    except dsl.GeometricEvalError as exc:
        print(f"{path}: geometric error: {exc}", file=sys.stderr)
        return None, EXIT_GEOMETRY
    except dsl.DslError as exc:
        print(f"{path}: error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE


def cmd_run(args) -> int:
    result, code = _evaluate_file(args.script, _config(args))
    if result is None:
        return code
    sys.stdout.write(result.report())
    return EXIT_OK if result.all_passed else EXIT_FAILED


def cmd_verify(args) -> int:
    cfg = _config(args)
    result = run_verification(cfg.iterations, cfg.seed)
    for i, t, tr, problems in result.failures:
        print(f"iteration {i}: triangle {t}, triple ({tr.alpha}, {tr.beta}, {tr.gamma}): {'; '.join(problems)}")
    print(result.summary())
    return EXIT_OK if not result.failures else EXIT_FAILED


def output_paths(out: Path, count: int) -> list[Path]:
    """``out`` itself for one scene, else ``stem-1.svg``, ``stem-2.svg``, ..."""
    if count == 1:
        return [out]
    return [out.with_name(f"{out.stem}-{i}{out.suffix}") for i in range(1, count + 1)]


def cmd_render(args) -> int:
    cfg = _config(args)
    style_path = args.style or os.environ.get(STYLE_ENV)
    style = None
    if style_path:
        try:
            style = load_style(style_path)
        except (OSError, ValueError) as exc:
            raise UsageError(f"bad style config: {exc}") from None
    result, code = _evaluate_file(args.script, cfg)
    if result is None:
        return code
    if not result.scenes:
        raise UsageError(f"{args.script} has no render directive")
    out = Path(args.output) if args.output else Path(args.script).with_suffix(".svg")
    for path, (_, scene) in zip(output_paths(out, len(result.scenes)), result.scenes):
        try:
            path.write_text(render_svg(scene, style), encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from None
        print(path)
    return EXIT_OK if result.all_passed else EXIT_FAILED


def _add_backend(p):
    p.add_argument("--backend", choices=[b.value for b in Backend], default="exact")
    p.add_argument("--tol", type=float, default=None, help="relative tolerance (float backend only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geoforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("naka", help="report DEF, D'E'F' and related values for a triangle")
    p.add_argument("triangle", nargs="+", help='vertices as "x1,y1 x2,y2 x3,y3"')
    p.add_argument("--json", action="store_true")
    _add_backend(p)
    p.set_defaults(func=cmd_naka)

    p = sub.add_parser("run", help="evaluate a .geo script and report its assertions")
    p.add_argument("script")
    _add_backend(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="run the property suites on random inputs")
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write one SVG per render directive of a script")
    p.add_argument("script")
    p.add_argument("-o", "--output")
    p.add_argument("--style", help=f"style-config file (default: ${STYLE_ENV})")
    _add_backend(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"geoforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
