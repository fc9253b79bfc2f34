from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .. import kernel as K
from ..errors import GeometryError
from ..kernel import Backend, Line, Point
from ..svg import LineItem, PointItem, PolygonItem, Scene, SegmentItem
from .lexer import DslError, SourceSpan
from .nodes import Assertion, Call, Coord, Decl, Number, Ref, RenderDirective, Script
from .parser import LINE_FUNCS, POINT_FUNCS, format_pred


class UndefinedIdentifierError(DslError):
    pass


class DslTypeError(DslError):
    """Wrong kind of object, wrong arity, or a literal the backend forbids."""


class GeometricEvalError(DslError):
    """A construction failed (parallel lines, coincident points, ...)."""


@dataclass
class AssertionResult:
    span: SourceSpan
    text: str
    passed: bool

    def __str__(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.span} {self.text}"


@dataclass
class Environment:
    """Named points and lines in declaration order."""

    values: dict = field(default_factory=dict)

    def serialize(self) -> str:
        lines = []
        for name, v in self.values.items():
            kind = "point" if isinstance(v, Point) else "line"
            lines.append(f"{kind} {name} = {v}")
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass
class EvalResult:
    env: Environment
    assertions: list
    scenes: list  # (name, Scene) per render directive

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def report(self) -> str:
        return "".join(f"{a}\n" for a in self.assertions)


def _number(n: Number, backend: Backend):
    if n.kind == "decimal":
        if backend is not Backend.FLOAT:
            raise DslTypeError(f"decimal literal {n.text} needs the float backend", n.span)
        return float(n.text)
    if n.kind == "rational" and backend is not Backend.EXACT:
        raise DslTypeError(f"rational literal {n.text} is exact-only; write a decimal", n.span)
    value = Fraction(n.text)
    return value if backend is Backend.EXACT else float(value)


class _Evaluator:
    def __init__(self, backend: Backend):
        self.backend = backend
        self.env = Environment()

    def lookup(self, ref: Ref, want):
        try:
            value = self.env.values[ref.name]
        except KeyError:
            raise UndefinedIdentifierError(f"undefined identifier {ref.name!r}", ref.span) from None
        if want is not None and not isinstance(value, want):
            raise DslTypeError(
                f"{ref.name!r} is a {type(value).__name__.lower()}, expected a {want.__name__.lower()}",
                ref.span,
            )
        return value

    def point(self, e) -> Point:
        if isinstance(e, Coord):
            return Point(_number(e.x, self.backend), _number(e.y, self.backend))
        if isinstance(e, Ref):
            return self.lookup(e, Point)
        if isinstance(e, Call):
            args = self.args(e, POINT_FUNCS)
            if e.func == "intersect":
                return K.intersect(*args)
            if e.func == "midpoint":
                return K.midpoint(*args)
            if e.func == "reflect":
                return K.reflect_across(*args)
            if e.func == "foot":
                return K.foot_of_perpendicular(*args)
            if e.func == "circumcenter":
                return K.circumcenter(K.Triangle(*args))
        raise DslTypeError("expected a point expression", getattr(e, "span", None))

    def line(self, e) -> Line:
        if isinstance(e, Ref):
            return self.lookup(e, Line)
        if isinstance(e, Call):
            args = self.args(e, LINE_FUNCS)
            if e.func == "line":
                return K.line_through(*args)
            if e.func == "perp_bisector":
                return K.perpendicular_bisector(*args)
            if e.func == "perp":
                return K.perpendicular_through(*args)
        raise DslTypeError("expected a line expression", getattr(e, "span", None))

    def args(self, call: Call, table):
        kinds = table.get(call.func)
        if kinds is None or len(kinds) != len(call.args):
            raise DslTypeError(f"bad call to {call.func}", call.span)
        return [self.point(a) if k == "P" else self.line(a) for k, a in zip(kinds, call.args)]

    def run_decl(self, s: Decl):
        if s.name in self.env.values:
            raise DslTypeError(f"identifier {s.name!r} is already declared", s.span)
        value = self.point(s.expr) if s.kind == "point" else self.line(s.expr)
        self.env.values[s.name] = value

    def run_assert(self, s: Assertion) -> AssertionResult:
        p = s.pred
        arity = {"collinear": 3, "equals": 2}.get(p.name)
        if arity is not None and len(p.groups[0]) != arity:
            raise DslTypeError(f"{p.name} takes exactly {arity} points", p.span)
        if p.name == "concyclic" and len(p.groups[0]) < 4:
            raise DslTypeError("concyclic needs at least four points", p.span)
        groups = [[self.point(e) for e in g] for g in p.groups]
        if p.name == "similar":
            ok = K.similar_sss(*groups) is not None
        elif p.name == "congruent":
            ok = K.congruent(*groups)
        elif p.name == "ratio_sq":
            k2 = K.similar_sss(*groups)
            ok = k2 is not None and K.close(k2, _number(p.value, self.backend))
        elif p.name == "concyclic":
            ok = K.concyclic(*groups[0])
        elif p.name == "collinear":
            ok = K.collinear(*groups[0])
        elif p.name == "equals":
            ok = K.points_equal(*groups[0])
        else:  # pragma: no cover - parser guarantees the name
            raise DslTypeError(f"unknown predicate {p.name}", p.span)
        return AssertionResult(s.span, format_pred(p), ok)

    def run_render(self, s: RenderDirective) -> Scene:
        scene = Scene()
        for item in s.items:
            if item.kind == "ref":
                value = self.lookup(Ref(item.names[0], item.span), None)
                if isinstance(value, Point):
                    scene.add(PointItem(value, item.label or item.names[0], item.style or "point"))
                else:
                    if item.label is not None:
                        raise DslTypeError("only points take labels", item.span)
                    scene.add(LineItem(value, item.style or "construction-line"))
                continue
            pts = tuple(self.lookup(Ref(n, item.span), Point) for n in item.names)
            if item.kind == "segment":
                if len(pts) != 2:
                    raise DslTypeError("segment takes exactly two points", item.span)
                scene.add(SegmentItem(*pts, style=item.style or "construction-line"))
            else:
                if len(pts) < 3:
                    raise DslTypeError("polygon needs at least three points", item.span)
                scene.add(PolygonItem(pts, item.style or "triangle-primary"))
        if not scene.finite_points():
            raise DslTypeError(f"render {s.name!r} draws no points", s.span)
        return scene


def evaluate(script: Script, backend=Backend.EXACT, tol: float = K.DEFAULT_TOL) -> EvalResult:
    """Run the statements of ``script`` in order.

    Raises a DslError subclass (carrying the statement span) on the first
    undefined name, kind mismatch or failed construction.  Assertion
    failures do not stop evaluation; they are reported in the result.
    """
    backend = Backend(backend)
    ev = _Evaluator(backend)
    assertions = []
    scenes = []
    with K.tolerance(tol):
        for s in script.statements:
            try:
                if isinstance(s, Decl):
                    ev.run_decl(s)
                elif isinstance(s, Assertion):
                    assertions.append(ev.run_assert(s))
                elif isinstance(s, RenderDirective):
                    scenes.append((s.name, ev.run_render(s)))
            except GeometryError as exc:
                raise GeometricEvalError(f"construction failed: {exc}", s.span) from exc
    return EvalResult(ev.env, assertions, scenes)
