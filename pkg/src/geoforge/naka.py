"""The triangle DEF, the extended triangle D'E'F', and related checks.

For a triangle ABC:

* D is where the perpendicular bisector of AB meets the altitude from B,
  E where the bisector of BC meets the altitude from C, and F where the
  bisector of CA meets the altitude from A.  DEF is similar to ABC with
  D, E, F corresponding to A, B, C.
* D' is where the bisector of AB meets the line through A perpendicular to
  CA; E' and F' follow the same cyclic pattern.  D'E'F' is similar to ABC
  as well, and its area is the sum of the areas of ABC and DEF.

Every point is built twice: by intersecting lines in the kernel, and from
the complex closed forms evaluated with the circumcenter at the origin.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional

from . import kernel as K
from .errors import ConstructionError, DegenerateInputError, GeometryError
from .kernel import Point, Triangle
from .numeric import format_rational, norm_sq


@dataclass(frozen=True)
class NakaPoints:
    d: Point
    e: Point
    f: Point

    def __iter__(self):
        return iter((self.d, self.e, self.f))


@dataclass(frozen=True)
class ExtendedPoints:
    d_prime: Point
    e_prime: Point
    f_prime: Point

    def __iter__(self):
        return iter((self.d_prime, self.e_prime, self.f_prime))


@dataclass(frozen=True)
class AuxPoints:
    """Auxiliary points: circumcenter ``o``, its mirror ``o_prime`` in BC,
    ``g`` (bisector of CA meets the altitude from C), ``s`` (CF meets O'D),
    ``m`` (OG meets CA) and ``n`` (OO' meets BC)."""

    o: Point
    o_prime: Point
    g: Point
    s: Point
    m: Point
    n: Point


# -- complex closed forms ---------------------------------------------------

def sigma_poly(a, b, c):
    """``a^2 + b^2 + c^2 - ab - bc - ca``; zero exactly for equilateral a, b, c."""
    return a * a + b * b + c * c - a * b - b * c - c * a


def pi_poly(a, b, c):
    return (a - b) * (b - c) * (c - a)


def ext_numerator_poly(a, b, c):
    return a * a * b + b * b * c + c * c * a - 3 * a * b * c


def circumcenter_frame(t: Triangle):
    """Circumcenter O and the vertices as complex numbers relative to O."""
    o = K.circumcenter(t)
    return o, tuple(p.to_complex(o) for p in t)


def naka_def_constructive(t: Triangle) -> NakaPoints:
    a, b, c = t
    d = _meet(K.perpendicular_bisector(a, b), K.perpendicular_through(b, K.line_through(a, c)))
    e = _meet(K.perpendicular_bisector(b, c), K.perpendicular_through(c, K.line_through(a, b)))
    f = _meet(K.perpendicular_bisector(c, a), K.perpendicular_through(a, K.line_through(b, c)))
    return NakaPoints(d, e, f)


def naka_def_closed_form(t: Triangle) -> NakaPoints:
    o, (al, be, ga) = circumcenter_frame(t)
    d = (be * be - al * ga) / (be - ga)
    e = (ga * ga - al * be) / (ga - al)
    f = (al * al - be * ga) / (al - be)
    return NakaPoints(*(Point.from_complex(z, o) for z in (d, e, f)))


def extended_points_constructive(t: Triangle) -> ExtendedPoints:
    a, b, c = t
    dp = _meet(K.perpendicular_bisector(a, b), K.perpendicular_through(a, K.line_through(c, a)))
    ep = _meet(K.perpendicular_bisector(b, c), K.perpendicular_through(b, K.line_through(a, b)))
    fp = _meet(K.perpendicular_bisector(c, a), K.perpendicular_through(c, K.line_through(b, c)))
    return ExtendedPoints(dp, ep, fp)


def extended_points_closed_form(t: Triangle) -> ExtendedPoints:
    o, (al, be, ga) = circumcenter_frame(t)
    dp = be * (al - ga) / (be - ga)
    ep = ga * (be - al) / (ga - al)
    fp = al * (ga - be) / (al - be)
    return ExtendedPoints(*(Point.from_complex(z, o) for z in (dp, ep, fp)))


def _meet(l1, l2) -> Point:
    # a bisector of one side and a perpendicular to another side of a valid
    # triangle are never parallel
    try:
        return K.intersect(l1, l2)
    except GeometryError as exc:  # pragma: no cover
        raise AssertionError(f"construction lines unexpectedly parallel: {exc}") from exc


# -- ratios -----------------------------------------------------------------

def similarity_ratio_sq_complex(t: Triangle, which: str = "def"):
    """Squared similarity ratio of DEF (``"def"``) or D'E'F' (``"ext"``) to ABC.

    With the circumcenter at the origin and circumradius R, the ratio for
    DEF is ``R |sigma| / |Pi|`` and for D'E'F' it is ``|N| / |Pi|``.
    """
    _, (al, be, ga) = circumcenter_frame(t)
    p = norm_sq(pi_poly(al, be, ga))
    if which == "def":
        return norm_sq(al) * norm_sq(sigma_poly(al, be, ga)) / p
    if which == "ext":
        return norm_sq(ext_numerator_poly(al, be, ga)) / p
    raise ValueError(f"which must be 'def' or 'ext', not {which!r}")


def similarity_ratio_sq_metric(t: Triangle):
    """``((a^2 + b^2 + c^2) / (8 S))^2 - 3/4`` from side lengths and area."""
    total = sum(K.side_lengths_sq(t))
    area = abs(K.area_signed(t))
    q = total / (8 * area)
    return q * q - (Fraction(3, 4) if t.exact else 0.75)


def is_equilateral_sigma(t: Triangle) -> bool:
    _, (al, be, ga) = circumcenter_frame(t)
    s = sigma_poly(al, be, ga)
    if t.exact:
        return s == 0
    scale = max(norm_sq(al), norm_sq(be), norm_sq(ga))
    return abs(s) <= K.get_tolerance() * scale


def side_factors(t: Triangle, which: str = "def"):
    """Measured complex factors ``(E-D)/(B-A), (F-E)/(C-B), (D-F)/(A-C)``.

    Computed relative to the circumcenter; ``which`` selects DEF or D'E'F'.
    """
    o = K.circumcenter(t)
    pts = naka_def_constructive(t) if which == "def" else extended_points_constructive(t)
    z = [p.to_complex(o) for p in pts]
    v = [p.to_complex(o) for p in t]
    return tuple((z[(i + 1) % 3] - z[i]) / (v[(i + 1) % 3] - v[i]) for i in range(3))


def predicted_side_factors(t: Triangle, which: str = "def"):
    """Closed-form factors: ``gamma sigma/Pi, alpha sigma/Pi, beta sigma/Pi``
    for DEF and ``-N/Pi`` (all three sides) for D'E'F'."""
    _, (al, be, ga) = circumcenter_frame(t)
    p = pi_poly(al, be, ga)
    if which == "def":
        s = sigma_poly(al, be, ga)
        return tuple(x * s / p for x in (ga, al, be))
    n = -ext_numerator_poly(al, be, ga) / p
    return (n, n, n)


# -- auxiliary points and propositions --------------------------------------

def _aux_components(t: Triangle) -> dict:
    """Each auxiliary point, or the ConstructionError that prevented it."""
    a, b, c = t
    out = {}
    o = K.circumcenter(t)
    out["o"] = o
    out["o_prime"] = K.reflect_across(o, K.line_through(b, c))
    out["g"] = _meet(K.perpendicular_through(c, K.line_through(a, b)), K.perpendicular_bisector(c, a))
    d, _, f = naka_def_constructive(t)
    named = {"C": c, "F": f, "O'": out["o_prime"], "D": d, "O": o, "G": out["g"], "A": a, "B": b}
    for key, (p1, p2), (q1, q2) in (
        ("s", ("C", "F"), ("O'", "D")),
        ("m", ("O", "G"), ("C", "A")),
        ("n", ("O", "O'"), ("B", "C")),
    ):
        pair = (p1 + p2, q1 + q2)
        try:
            out[key] = K.intersect(
                K.line_through(named[p1], named[p2]), K.line_through(named[q1], named[q2])
            )
        except GeometryError as exc:
            out[key] = ConstructionError(f"cannot intersect {pair[0]} and {pair[1]}: {exc}", pair)
    return out


def aux_points(t: Triangle) -> AuxPoints:
    comps = _aux_components(t)
    for v in comps.values():
        if isinstance(v, ConstructionError):
            raise v
    return AuxPoints(**comps)


class PropositionVerdicts(NamedTuple):
    """One verdict per proposition; None means the needed points could not be built."""

    bdoo_concyclic: Optional[bool]
    ogco_concyclic: Optional[bool]
    abc_similar_oec: Optional[bool]
    seco_concyclic: Optional[bool]
    dbo_congruent_goc: Optional[bool]
    ecf_similar_eod: Optional[bool]

    def all_true(self) -> bool:
        return all(v is True for v in self)


def proposition_suite(t: Triangle) -> PropositionVerdicts:
    """Evaluate the six auxiliary-point propositions with exact predicates.

    1. B, D, O, O' concyclic      2. O, G, C, O' concyclic
    3. ABC ~ O'EC                 4. S, E, C, O' concyclic
    5. DBO' congruent to GO'C     6. ECF ~ EO'D
    """
    a, b, c = t
    d, e, f = naka_def_constructive(t)
    comps = _aux_components(t)
    o, op, g, s = comps["o"], comps["o_prime"], comps["g"], comps["s"]
    prop4 = None if isinstance(s, ConstructionError) else K.concyclic(s, e, c, op)
    return PropositionVerdicts(
        K.concyclic(b, d, o, op),
        K.concyclic(o, g, c, op),
        K.similar_sss((a, b, c), (op, e, c)) is not None,
        prop4,
        K.congruent((d, b, op), (g, op, c)),
        K.similar_sss((e, c, f), (e, op, d)) is not None,
    )


def area_additivity(t: Triangle):
    """``(|ABC|, |DEF|, |D'E'F'|)``; the third equals the sum of the first two."""
    return (
        abs(K.area_signed(t)),
        abs(K.area_signed(tuple(naka_def_constructive(t)))),
        abs(K.area_signed(tuple(extended_points_constructive(t)))),
    )


# -- congruent copies of D'E'F' ---------------------------------------------

def extended_candidates(t: Triangle):
    """Intersections of each side's perpendicular bisector with each line
    through a vertex perpendicular to a side (3 x 9 pairs, parallels skipped).

    Returns a list of ``(point, label)`` with duplicate points merged; labels
    read like ``"bis(AB) x perp(C, BC)"``.
    """
    names = dict(zip("ABC", t))
    sides = ("AB", "BC", "CA")
    found: list[tuple[Point, list[str]]] = []
    for side in sides:
        bis = K.perpendicular_bisector(names[side[0]], names[side[1]])
        for v in "ABC":
            for other in sides:
                perp = K.perpendicular_through(names[v], K.line_through(names[other[0]], names[other[1]]))
                try:
                    p = K.intersect(bis, perp)
                except GeometryError:
                    continue
                label = f"bis({side}) x perp({v}, {other})"
                for q, labels in found:
                    if K.points_equal(p, q):
                        labels.append(label)
                        break
                else:
                    found.append((p, [label]))
    return [(p, " | ".join(labels)) for p, labels in found]


def _sorted_sides(pts):
    return sorted(K.side_lengths_sq(pts))


def enumerate_congruent_extended(t: Triangle) -> list[Triangle]:
    """All candidate triangles congruent to D'E'F' under any correspondence.

    Candidates come from :func:`extended_candidates`.  Each result is a
    Triangle with its vertices in sorted coordinate order; the list is
    sorted, deduplicated, and always contains D'E'F' itself.
    """
    if is_equilateral_sigma(t):
        raise DegenerateInputError("equilateral input")
    target = _sorted_sides(tuple(extended_points_constructive(t)))
    points = sorted((p for p, _ in extended_candidates(t)), key=lambda p: (p.x, p.y))
    result = []
    for tri in combinations(points, 3):
        sides = _sorted_sides(tri)
        if all(K.close(x, y) for x, y in zip(sides, target)) and not K.collinear(*tri):
            result.append(Triangle(*tri))
    return result


# -- report -----------------------------------------------------------------

def _fmt(v):
    if v is None:
        return None
    if isinstance(v, (Point, K.Line, Triangle)):
        return str(v)
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, complex):
        sign = "-" if v.imag < 0 else "+"
        return f"{v.real!r}{sign}{abs(v.imag)!r}*i"
    return str(v)


@dataclass
class NakaReport:
    input: Triangle
    naka: NakaPoints
    extended: ExtendedPoints
    aux: dict
    ratio_sq_def: object
    ratio_sq_ext: object
    areas: tuple
    proposition_verdicts: PropositionVerdicts
    sigma: object
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        aux = {k: (None if isinstance(v, ConstructionError) else _fmt(v)) for k, v in self.aux.items()}
        return {
            "input": [_fmt(p) for p in self.input],
            "D": _fmt(self.naka.d),
            "E": _fmt(self.naka.e),
            "F": _fmt(self.naka.f),
            "Dp": _fmt(self.extended.d_prime),
            "Ep": _fmt(self.extended.e_prime),
            "Fp": _fmt(self.extended.f_prime),
            "O": aux["o"],
            "Oprime": aux["o_prime"],
            "G": aux["g"],
            "S": aux["s"],
            "M": aux["m"],
            "N": aux["n"],
            "ratio_sq_def": _fmt(self.ratio_sq_def),
            "ratio_sq_ext": _fmt(self.ratio_sq_ext),
            "areas": [_fmt(a) for a in self.areas],
            "props": list(self.proposition_verdicts),
            "sigma": _fmt(self.sigma),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if isinstance(value, list):
                value = ", ".join("n/a" if v is None else str(v).lower() if isinstance(v, bool) else str(v) for v in value)
            lines.append(f"{key}: {'n/a' if value is None else value}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def naka_report(t: Triangle) -> NakaReport:
    _, (al, be, ga) = circumcenter_frame(t)
    aux = _aux_components(t)
    notes = [str(v) for v in aux.values() if isinstance(v, ConstructionError)]
    return NakaReport(
        input=t,
        naka=naka_def_constructive(t),
        extended=extended_points_constructive(t),
        aux=aux,
        ratio_sq_def=similarity_ratio_sq_complex(t, "def"),
        ratio_sq_ext=similarity_ratio_sq_complex(t, "ext"),
        areas=area_additivity(t),
        proposition_verdicts=proposition_suite(t),
        sigma=sigma_poly(al, be, ga),
        notes=notes,
    )
