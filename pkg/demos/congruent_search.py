"""Brute-force search for triangles congruent to D'E'F' among the
intersections of perpendicular bisectors with vertex perpendiculars."""

from collections import Counter

from geoforge import naka
from geoforge.kernel import Point, Triangle
from geoforge.verify import random_triangles

t = Triangle(Point(0, 0), Point(6, 0), Point(1, 4))
cands = naka.extended_candidates(t)
print(f"{len(cands)} candidate points")
for p, label in cands[:6]:
    print(f"  {label}: {p}")
print("  ...")

found = naka.enumerate_congruent_extended(t)
ext = set(naka.extended_points_constructive(t))
for tri in found:
    mark = "  <- D'E'F'" if set(tri) == ext else ""
    print(" ", *tri, mark)

counts = Counter(len(naka.enumerate_congruent_extended(s)) for s in random_triangles(30, seed=3))
print("\ncongruent triangles found per random triangle:", dict(counts))
