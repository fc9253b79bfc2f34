"""Walk through triangle DEF of A(1,0), B(0,1), C(-1,0) step by step."""

from geoforge import kernel as K
from geoforge import naka
from geoforge.kernel import Point, Triangle

t = Triangle(Point(1, 0), Point(0, 1), Point(-1, 0))
a, b, c = t
print("triangle:", a, b, c)

# D sits on the bisector of AB and on the altitude from B
bis_ab = K.perpendicular_bisector(a, b)
alt_b = K.perpendicular_through(b, K.line_through(a, c))
print("bisector of AB:", bis_ab)
print("altitude from B:", alt_b)
print("D =", K.intersect(bis_ab, alt_b))

pts = naka.naka_def_constructive(t)
print("\nconstructive DEF:", *pts)
print("closed form DEF: ", *naka.naka_def_closed_form(t))

k2 = K.similar_sss(t, tuple(pts))
print("\nsimilar by SSS, k^2 =", k2)
print("orientation:", K.directly_similar(t, tuple(pts)).value)

ext = naka.extended_points_constructive(t)
print("\nD'E'F':", *ext)
print("k^2(ext) =", K.similar_sss(t, tuple(ext)), "= 1 + k^2(def)")
print("D' is D mirrored in AB:", ext.d_prime == K.reflect_across(pts.d, K.line_through(a, b)))

s_abc, s_def, s_ext = naka.area_additivity(t)
print(f"\nareas: ABC={s_abc} DEF={s_def} D'E'F'={s_ext}")

print("\nfull report:")
print(naka.naka_report(t).to_text())
