"""Points, lines, triangles, constructions and predicates.

One set of functions serves two backends.  A point whose coordinates are
ints or Fractions belongs to the exact backend: every construction stays in
rational arithmetic and every predicate is decided by exact comparison with
zero.  A point with float coordinates belongs to the float backend, where
predicates compare against a relative tolerance (default ``1e-9``, changed
with :func:`tolerance`).
"""

from __future__ import annotations

import contextvars
import enum
import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from .errors import AmbiguousIntersectionError, DegenerateInputError, NoIntersectionError
from .numeric import GaussianRational, format_rational

DEFAULT_TOL = 1e-9

_tol = contextvars.ContextVar("geoforge_tolerance", default=DEFAULT_TOL)


class Backend(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


@contextmanager
def tolerance(eps: float):
    """Temporarily set the relative tolerance used by float-backend predicates."""
    if not eps > 0:
        raise ValueError("tolerance must be positive")
    token = _tol.set(float(eps))
    try:
        yield eps
    finally:
        _tol.reset(token)


def get_tolerance() -> float:
    return _tol.get()


def is_exact(*values) -> bool:
    return all(isinstance(v, Rational) for v in values)


def is_zero(value, scale=0) -> bool:
    """Exact test against zero, or ``|value| <= tol * scale`` for floats.

    ``scale`` is the magnitude of the terms that produced ``value``.
    """
    if isinstance(value, Rational):
        return value == 0
    return abs(value) <= _tol.get() * abs(scale)


def close(x, y) -> bool:
    if isinstance(x, Rational) and isinstance(y, Rational):
        return x == y
    return is_zero(x - y, max(abs(x), abs(y)))


def _fmt_scalar(v) -> str:
    if isinstance(v, Rational):
        return format_rational(v)
    return repr(float(v))


@dataclass(frozen=True, slots=True)
class Point:
    x: object
    y: object

    def __post_init__(self):
        if is_exact(self.x, self.y):
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))
        else:
            object.__setattr__(self, "x", float(self.x))
            object.__setattr__(self, "y", float(self.y))

    @property
    def exact(self) -> bool:
        return isinstance(self.x, Fraction)

    @property
    def backend(self) -> Backend:
        return Backend.EXACT if self.exact else Backend.FLOAT

    def to_complex(self, origin: "Point | None" = None):
        """Complex coordinate (GaussianRational or complex) relative to ``origin``."""
        x, y = self.x, self.y
        if origin is not None:
            x, y = x - origin.x, y - origin.y
        if self.exact and (origin is None or origin.exact):
            return GaussianRational(x, y)
        return complex(x, y)

    @classmethod
    def from_complex(cls, z, origin: "Point | None" = None) -> "Point":
        p = cls(z.real, z.imag)
        if origin is not None:
            p = cls(p.x + origin.x, p.y + origin.y)
        return p

    def to_float(self) -> "Point":
        return Point(float(self.x), float(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({_fmt_scalar(self.x)}, {_fmt_scalar(self.y)})"


def make_point(x, y, backend=Backend.EXACT) -> Point:
    if Backend(backend) is Backend.FLOAT:
        return Point(float(x), float(y))
    return Point(Fraction(x), Fraction(y))


def points_equal(p: Point, q: Point) -> bool:
    if p.exact and q.exact:
        return p == q
    scale = max(abs(p.x), abs(p.y), abs(q.x), abs(q.y), 1.0)
    return is_zero(math.hypot(p.x - q.x, p.y - q.y), scale)


def _canonical_int(a, b, c):
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    den = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = int(a * den), int(b * den), int(c * den)
    g = math.gcd(ia, ib, ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return ia, ib, ic


def _canonical_float(a, b, c):
    a, b, c = float(a), float(b), float(c)
    n = math.hypot(a, b)
    a, b, c = a / n, b / n, c / n
    lead = a if abs(a) > _tol.get() else b
    if lead < 0:
        a, b, c = -a, -b, -c
    return a + 0.0, b + 0.0, c + 0.0


@dataclass(frozen=True, slots=True)
class Line:
    """The locus ``a*x + b*y = c``, stored in canonical form.

    Exact lines hold coprime integers with a positive leading coefficient,
    so equal lines compare equal.  Float lines hold a unit normal ``(a, b)``.
    """

    a: object
    b: object
    c: object

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise DegenerateInputError("line with zero normal vector")
        if is_exact(self.a, self.b, self.c):
            coeffs = _canonical_int(self.a, self.b, self.c)
        else:
            coeffs = _canonical_float(self.a, self.b, self.c)
        for name, v in zip("abc", coeffs):
            object.__setattr__(self, name, v)

    @property
    def exact(self) -> bool:
        return isinstance(self.a, int)

    def value_at(self, p: Point):
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        scale = abs(self.a * p.x) + abs(self.b * p.y) + abs(self.c)
        return is_zero(self.value_at(p), scale)

    def __str__(self):
        return f"{_fmt_scalar(self.a)}*x + {_fmt_scalar(self.b)}*y = {_fmt_scalar(self.c)}"


def lines_equal(l1: Line, l2: Line) -> bool:
    if l1.exact and l2.exact:
        return l1 == l2
    return all(close(u, v) or is_zero(u - v, 1.0) for u, v in ((l1.a, l2.a), (l1.b, l2.b), (l1.c, l2.c)))


def _orient(p: Point, q: Point, r: Point):
    """Twice the signed area of pqr, with the magnitude of its two terms."""
    left = (q.x - p.x) * (r.y - p.y)
    right = (q.y - p.y) * (r.x - p.x)
    return left - right, abs(left) + abs(right)


@dataclass(frozen=True, slots=True)
class Triangle:
    """Ordered triangle; the constructor rejects coincident or collinear vertices."""

    p1: Point
    p2: Point
    p3: Point

    def __post_init__(self):
        pts = (self.p1, self.p2, self.p3)
        if any(points_equal(p, q) for p, q in combinations(pts, 2)):
            raise DegenerateInputError("coincident input")
        if collinear(*pts):
            raise DegenerateInputError("collinear input")

    @property
    def vertices(self):
        return (self.p1, self.p2, self.p3)

    @property
    def exact(self) -> bool:
        return all(p.exact for p in self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self):
        return f"[{self.p1}, {self.p2}, {self.p3}]"


def line_through(p: Point, q: Point) -> Line:
    if points_equal(p, q):
        raise DegenerateInputError(f"line through coincident points {p}")
    a = q.y - p.y
    b = p.x - q.x
    return Line(a, b, a * p.x + b * p.y)


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line(-l.b, l.a, -l.b * p.x + l.a * p.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def perpendicular_bisector(p: Point, q: Point) -> Line:
    return perpendicular_through(midpoint(p, q), line_through(p, q))


def intersect(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if is_zero(det, abs(l1.a * l2.b) + abs(l2.a * l1.b)):
        if lines_equal(l1, l2):
            raise AmbiguousIntersectionError(f"identical lines {l1}")
        raise NoIntersectionError(f"parallel lines {l1} and {l2}")
    if isinstance(det, int):
        det = Fraction(det)
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def foot_of_perpendicular(p: Point, l: Line) -> Point:
    n = l.a * l.a + l.b * l.b
    if isinstance(n, int):
        n = Fraction(n)
    t = l.value_at(p) / n
    return Point(p.x - l.a * t, p.y - l.b * t)


def reflect_across(p: Point, l: Line) -> Point:
    f = foot_of_perpendicular(p, l)
    return Point(2 * f.x - p.x, 2 * f.y - p.y)


def circumcenter(t: Triangle) -> Point:
    return intersect(perpendicular_bisector(t.p1, t.p2), perpendicular_bisector(t.p2, t.p3))


def dist_sq(p: Point, q: Point):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def area_signed(t) -> object:
    """Shoelace area of three points; positive for counter-clockwise order."""
    p, q, r = t
    return _orient(p, q, r)[0] / 2


def collinear(p: Point, q: Point, r: Point) -> bool:
    det, scale = _orient(p, q, r)
    return is_zero(det, scale)


def concyclic(*points: Point) -> bool:
    """True when all points lie on one circle (or line).

    For four points this is the vanishing of the determinant with rows
    ``(x^2 + y^2, x, y, 1)``.  Coincident points make it vanish, so they
    count as concyclic.  More than four points are checked four at a time.
    """
    if len(points) < 4:
        raise ValueError("concyclic needs at least four points")
    return all(_incircle_zero(*quad) for quad in combinations(points, 4))


def _incircle_zero(pa: Point, pb: Point, pc: Point, pd: Point) -> bool:
    adx, ady = pa.x - pd.x, pa.y - pd.y
    bdx, bdy = pb.x - pd.x, pb.y - pd.y
    cdx, cdy = pc.x - pd.x, pc.y - pd.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )
    scale = (
        alift * (abs(bdx * cdy) + abs(cdx * bdy))
        + blift * (abs(cdx * ady) + abs(adx * cdy))
        + clift * (abs(adx * bdy) + abs(bdx * ady))
    )
    return is_zero(det, scale)


def side_lengths_sq(t):
    """Squared lengths of sides p1p2, p2p3, p3p1."""
    p, q, r = t
    return dist_sq(p, q), dist_sq(q, r), dist_sq(r, p)


def similar_sss(t1, t2):
    """Squared similarity ratio of ``t2`` to ``t1`` under positional correspondence.

    Returns ``k^2`` when every squared side of ``t2`` is ``k^2`` times the
    corresponding squared side of ``t1``, otherwise None.  Accepts Triangles
    or plain point triples.  On the float backend a ``t2`` that is below
    tolerance relative to ``t1`` counts as collapsed to a point (``k^2 ~ 0``).
    """
    s = side_lengths_sq(t1)
    u = side_lengths_sq(t2)
    total_s, total_u = sum(s), sum(u)
    if total_s == 0:
        return None
    if is_exact(total_s, total_u):
        if any(u[i] * s[j] != u[j] * s[i] for i, j in ((0, 1), (1, 2), (0, 2))):
            return None
        return Fraction(total_u) / total_s
    if is_zero(total_u, total_s):
        return total_u / total_s
    for i, j in ((0, 1), (1, 2), (0, 2)):
        if not is_zero(u[i] * s[j] - u[j] * s[i], total_u * total_s):
            return None
    return total_u / total_s


def congruent(t1, t2) -> bool:
    k2 = similar_sss(t1, t2)
    return k2 is not None and close(k2, 1)


class Orientation(str, enum.Enum):
    DIRECT = "direct"
    OPPOSITE = "opposite"
    NONE = "none"


def _complex_close(z, w) -> bool:
    if isinstance(z, GaussianRational) and isinstance(w, GaussianRational):
        return z == w
    z, w = complex(z), complex(w)
    return abs(z - w) <= _tol.get() * max(abs(z), abs(w), 1.0)


def directly_similar(t1, t2) -> Orientation:
    """Classify the similarity of two triangles as direct, opposite or none.

    Compares the complex shape ratios ``(p2 - p1) / (p3 - p1)``; equal ratios
    mean a similarity that keeps orientation, conjugate ratios one that
    reverses it.
    """
    p1, p2, p3 = t1
    q1, q2, q3 = t2
    z = (p2.to_complex(p1)) / (p3.to_complex(p1))
    w = (q2.to_complex(q1)) / (q3.to_complex(q1))
    if _complex_close(z, w):
        return Orientation.DIRECT
    if _complex_close(z, w.conjugate()):
        return Orientation.OPPOSITE
    return Orientation.NONE
