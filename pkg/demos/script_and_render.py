"""Evaluate a construction script, then render its scene to SVG."""

import sys
import tempfile
from pathlib import Path

from geoforge.dsl import evaluate, parse
from geoforge.kernel import Backend
from geoforge.svg import render_svg

SOURCE = """
point A = (0, 0);
point B = (6, 0);
point C = (1, 4);
point D = intersect(perp_bisector(A, B), perp(B, line(A, C)));
point E = intersect(perp_bisector(B, C), perp(C, line(A, B)));
point F = intersect(perp_bisector(C, A), perp(A, line(B, C)));
point O = circumcenter(A, B, C);
assert similar (A, B, C; D, E, F);
assert ratio_sq (A, B, C; D, E, F) == 481/2304;
render "scalene" {
    polygon(A, B, C);
    polygon(D, E, F) style "triangle-derived";
    segment(O, C);
    A; B; C; D; E; F; O label "circumcenter";
}
"""

script = parse(SOURCE)
result = evaluate(script)
print(result.env.serialize())
print(result.report())

# p/q literals are exact-only, so run just the declarations on floats
decls = SOURCE.split("assert")[0]
approx = evaluate(parse(decls), Backend.FLOAT)
print("float backend D:", approx.env.values["D"])

(name, scene), = result.scenes
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.gettempdir()) / f"{name}.svg"
out.write_text(render_svg(scene))
print(f"wrote {out}")
