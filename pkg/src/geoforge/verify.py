"""Seeded random sampling and the per-input property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import kernel as K
from . import naka
from .errors import DegenerateInputError
from .identities import check_ratio_consistency, check_triple, random_unimodular_triple
from .kernel import Point, Triangle

COORD_BOUND = 100


def random_triangle(rng: random.Random, bound: int = COORD_BOUND) -> Triangle:
    """Non-degenerate triangle with integer coordinates in ``[-bound, bound]``."""
    while True:
        pts = [Point(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(3)]
        try:
            return Triangle(*pts)
        except DegenerateInputError:
            continue


def random_triangles(n: int, seed: int, bound: int = COORD_BOUND) -> list[Triangle]:
    rng = random.Random(seed)
    return [random_triangle(rng, bound) for _ in range(n)]


def check_triangle(t: Triangle) -> list[str]:
    """Run every exact construction property on ``t``; return the failures."""
    problems = []
    def_c = naka.naka_def_constructive(t)
    ext_c = naka.extended_points_constructive(t)
    if def_c != naka.naka_def_closed_form(t):
        problems.append("DEF constructive != closed form")
    if ext_c != naka.extended_points_closed_form(t):
        problems.append("D'E'F' constructive != closed form")

    k2_def = K.similar_sss(t, tuple(def_c))
    k2_ext = K.similar_sss(t, tuple(ext_c))
    if k2_def is None or k2_def != naka.similarity_ratio_sq_complex(t, "def"):
        problems.append("ABC ~ DEF ratio")
    if k2_ext is None or k2_ext != naka.similarity_ratio_sq_complex(t, "ext"):
        problems.append("ABC ~ D'E'F' ratio")
    if k2_def is not None and k2_ext is not None and k2_ext != 1 + k2_def:
        problems.append("k2(ext) != 1 + k2(def)")
    if not check_ratio_consistency(t):
        problems.append("metric ratio formula")

    if ext_c.d_prime != K.reflect_across(def_c.d, K.line_through(t.p1, t.p2)):
        problems.append("D' is not the mirror of D in AB")
    s_abc, s_def, s_ext = naka.area_additivity(t)
    if s_ext != s_abc + s_def:
        problems.append("area additivity")

    measured = naka.side_factors(t, "def")
    if measured != naka.predicted_side_factors(t, "def") or len({z.norm_sq() for z in measured}) != 1:
        problems.append("DEF side-vector factorization")
    if naka.side_factors(t, "ext") != naka.predicted_side_factors(t, "ext"):
        problems.append("D'E'F' side-vector factorization")

    verdicts = naka.proposition_suite(t)
    bad = [name for name, v in verdicts._asdict().items() if v is False]
    if bad:
        problems.append("propositions: " + ", ".join(bad))
    return problems


@dataclass
class VerifyResult:
    iterations: int
    seed: int
    passed: int = 0
    failures: list = field(default_factory=list)

    def summary(self) -> str:
        return f"{self.passed}/{self.iterations} passed (seed={self.seed})"


def run_verification(iterations: int, seed: int) -> VerifyResult:
    """One random triangle and one random unimodular triple per iteration."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    rng = random.Random(seed)
    result = VerifyResult(iterations=iterations, seed=seed)
    for i in range(iterations):
        t = random_triangle(rng)
        tr = random_unimodular_triple(rng)
        problems = check_triangle(t) + check_triple(tr)
        if problems:
            result.failures.append((i, t, tr, problems))
        else:
            result.passed += 1
    return result
