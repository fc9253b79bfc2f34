"""Deterministic SVG output for construction scenes.

Coordinates stay exact up to this module; they become 6-significant-digit
decimals only when written out.  The y axis is flipped so that
mathematical "up" is up in the picture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from typing import NamedTuple, Optional, Sequence
from xml.sax.saxutils import escape

from .kernel import Line, Point

STYLE_CLASSES = ("triangle-primary", "triangle-derived", "construction-line", "point", "label")

DEFAULT_STYLE = {
    "triangle-primary": {"stroke": "#1f3b73", "fill": "none", "width": "0.45"},
    "triangle-derived": {"stroke": "#b03a2e", "fill": "none", "width": "0.35"},
    "construction-line": {"stroke": "#8a8a8a", "fill": "none", "width": "0.15"},
    "point": {"stroke": "none", "fill": "#000000", "width": "0"},
    "label": {"stroke": "none", "fill": "#000000", "width": "0"},
}

MARGIN = 0.05
MIN_EXTENT = 1.0
POINT_RADIUS = 0.008
FONT_SIZE = 0.035
PIXELS = 600


@dataclass(frozen=True)
class PointItem:
    point: Point
    label: Optional[str] = None
    style: str = "point"

    def __post_init__(self):
        if self.label is not None and not self.label:
            raise ValueError("point labels must be non-empty")


@dataclass(frozen=True)
class SegmentItem:
    p: Point
    q: Point
    style: str = "construction-line"


@dataclass(frozen=True)
class LineItem:
    line: Line
    style: str = "construction-line"


@dataclass(frozen=True)
class PolygonItem:
    points: tuple
    style: str = "triangle-primary"


@dataclass
class Scene:
    """Drawable items, painted in list order."""

    items: list = field(default_factory=list)

    def add(self, item):
        self.items.append(item)
        return self

    def finite_points(self) -> list[Point]:
        pts = []
        for item in self.items:
            if isinstance(item, PointItem):
                pts.append(item.point)
            elif isinstance(item, SegmentItem):
                pts.extend((item.p, item.q))
            elif isinstance(item, PolygonItem):
                pts.extend(item.points)
        return pts


class ViewBox(NamedTuple):
    """Visible region in SVG user units (y already flipped)."""

    x: float
    y: float
    width: float
    height: float

    def __str__(self):
        return f"({fmt(self.x)}, {fmt(self.y)}, {fmt(self.width)}, {fmt(self.height)})"

    @property
    def attribute(self) -> str:
        return " ".join(fmt(v) for v in self)


def fmt(v) -> str:
    """Six significant digits, never in exponent notation, no negative zero."""
    v = float(v)
    if v == 0 or not math.isfinite(v):
        return "0" if v == 0 else str(v)
    text = f"{v:.6g}"
    if "e" in text:
        text = format(Decimal(text), "f")
        if "." in text:
            text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "0") else text


def _span(lo: float, hi: float):
    extent = hi - lo
    lo, extent = lo - MARGIN * extent, extent * (1 + 2 * MARGIN)
    if extent < MIN_EXTENT:
        lo -= (MIN_EXTENT - extent) / 2
        extent = MIN_EXTENT
    return lo, extent


def autoscale(scene: Scene) -> ViewBox:
    """Bounding box of the finite points plus a 5% margin on every side.

    A box thinner than one unit in either direction is widened to one unit
    about its centre.
    """
    pts = scene.finite_points()
    if not pts:
        raise ValueError("cannot autoscale a scene without points")
    xs = [float(p.x) for p in pts]
    ys = [-float(p.y) for p in pts]
    x0, w = _span(min(xs), max(xs))
    y0, h = _span(min(ys), max(ys))
    return ViewBox(x0, y0, w, h)


def clip_line(line: Line, box: ViewBox):
    """Endpoints of ``line`` inside ``box`` in math coordinates, or None."""
    a, b, c = float(line.a), float(line.b), float(line.c)
    xmin, xmax = box.x, box.x + box.width
    ymin, ymax = -(box.y + box.height), -box.y
    hits = []
    if b != 0:
        for x in (xmin, xmax):
            y = (c - a * x) / b
            if ymin <= y <= ymax:
                hits.append((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = (c - b * y) / a
            if xmin <= x <= xmax:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    return hits[0], hits[-1]


def load_style(path) -> dict:
    """Read a style-config file of ``class.property = value`` lines.

    Properties are ``stroke``, ``fill`` and ``width`` (stroke width as a
    percentage of the larger view-box side).  Lines starting with ``#``
    are comments.
    """
    with open(path, encoding="utf-8") as fh:
        return parse_style(fh.read())


def parse_style(text: str) -> dict:
    style = {cls: dict(props) for cls, props in DEFAULT_STYLE.items()}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        cls, dot, prop = key.strip().rpartition(".")
        if not sep or not dot or cls not in style or prop not in ("stroke", "fill", "width"):
            raise ValueError(f"style line {n}: cannot parse {raw!r}")
        style[cls][prop] = value.strip()
    return style


def _css(style: dict, extent: float) -> str:
    rules = []
    for cls in STYLE_CLASSES:
        props = style[cls]
        width = float(props["width"]) / 100 * extent
        rules.append(
            f".{cls} {{ fill: {props['fill']}; stroke: {props['stroke']}; stroke-width: {fmt(width)}; }}"
        )
    rules.append(f".label {{ font-family: sans-serif; font-size: {fmt(FONT_SIZE * extent)}px; }}")
    return "\n".join(rules)


def _xy(p) -> tuple[str, str]:
    x, y = p
    return fmt(x), fmt(-float(y))


def _points_attr(points: Sequence) -> str:
    return " ".join(",".join(_xy(p)) for p in points)


def render_svg(scene: Scene, style: dict | None = None) -> str:
    """Serialize ``scene`` as a standalone SVG 1.1 document.

    The output depends only on the scene and style, byte for byte.
    """
    style = style or DEFAULT_STYLE
    box = autoscale(scene)
    extent = max(box.width, box.height)
    radius = POINT_RADIUS * extent
    if box.width >= box.height:
        width_px, height_px = PIXELS, PIXELS * box.height / box.width
    else:
        width_px, height_px = PIXELS * box.width / box.height, PIXELS

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(width_px)}" height="{fmt(height_px)}" viewBox="{box.attribute}">',
        "<style>",
        _css(style, extent),
        "</style>",
    ]
    for item in scene.items:
        if isinstance(item, PolygonItem):
            out.append(f'<polygon class="{item.style}" points="{_points_attr(item.points)}"/>')
        elif isinstance(item, SegmentItem):
            (x1, y1), (x2, y2) = _xy(item.p), _xy(item.q)
            out.append(f'<line class="{item.style}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        elif isinstance(item, LineItem):
            ends = clip_line(item.line, box)
            if ends is None:
                continue
            (x1, y1), (x2, y2) = _xy(ends[0]), _xy(ends[1])
            out.append(f'<line class="{item.style}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        elif isinstance(item, PointItem):
            cx, cy = _xy(item.point)
            out.append(f'<circle class="{item.style}" cx="{cx}" cy="{cy}" r="{fmt(radius)}"/>')
            if item.label:
                lx = fmt(float(item.point.x) + 1.5 * radius)
                ly = fmt(-float(item.point.y) - 1.5 * radius)
                out.append(f'<text class="label" x="{lx}" y="{ly}">{escape(item.label)}</text>')
        else:
            raise TypeError(f"unknown scene item {item!r}")
    out.append("</svg>")
    return "\n".join(out) + "\n"
