import math
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from geoforge import kernel as K
from geoforge import naka
from geoforge.errors import ConstructionError, DegenerateInputError
from geoforge.kernel import Point as P, Triangle
from geoforge.numeric import GaussianRational as G
from geoforge.verify import random_triangle

WORKED = Triangle(P(1, 0), P(0, 1), P(-1, 0))
RIGHT_345 = Triangle(P(0, 0), P(4, 0), P(0, 3))
SCALENE = Triangle(P(0, 0), P(6, 0), P(1, 4))
S3 = 0.8660254037844386
EQUILATERAL = Triangle(P(1.0, 0.0), P(-0.5, S3), P(-0.5, -S3))

seeds = st.integers(0, 2**32 - 1)


def tri_from_seed(seed):
    return random_triangle(random.Random(seed))


def test_worked_naka_points():
    expected = naka.NakaPoints(P(0, 0), P(Fr(-1, 2), Fr(1, 2)), P(0, 1))
    assert naka.naka_def_constructive(WORKED) == expected
    assert naka.naka_def_closed_form(WORKED) == expected


def test_closed_form_on_unit_circle_values():
    # alpha = 1, beta = i, gamma = -1 straight into the formulas
    al, be, ga = G(1), G(0, 1), G(-1)
    assert (be * be - al * ga) / (be - ga) == 0
    assert (ga * ga - al * be) / (ga - al) == G(Fr(-1, 2), Fr(1, 2))
    assert (al * al - be * ga) / (al - be) == G(0, 1)


def test_right_triangle_d_is_on_the_leg():
    # AC is the y axis, so the altitude from B is y = 0 and D = (2, 0)
    assert naka.naka_def_constructive(RIGHT_345).d == P(2, 0)
    assert naka.naka_def_constructive(RIGHT_345) == naka.naka_def_closed_form(RIGHT_345)


def test_worked_extended_points():
    expected = naka.ExtendedPoints(P(1, 1), P(Fr(-1, 2), Fr(1, 2)), P(0, -1))
    assert naka.extended_points_constructive(WORKED) == expected
    assert naka.extended_points_closed_form(WORKED) == expected
    assert K.reflect_across(P(0, 0), K.line_through(WORKED.p1, WORKED.p2)) == P(1, 1)


def test_float_equilateral_collapses():
    for pts in (naka.naka_def_constructive(EQUILATERAL), naka.naka_def_closed_form(EQUILATERAL)):
        for p in pts:
            assert math.hypot(p.x, p.y) <= 1e-9
    assert naka.is_equilateral_sigma(EQUILATERAL)
    assert naka.similarity_ratio_sq_complex(EQUILATERAL, "def") <= 1e-18
    assert naka.similarity_ratio_sq_metric(EQUILATERAL) == pytest.approx(0, abs=1e-9)
    # D'E'F' is congruent to ABC once DEF has collapsed
    assert naka.similarity_ratio_sq_complex(EQUILATERAL, "ext") == pytest.approx(1.0)
    s_abc, s_def, s_ext = naka.area_additivity(EQUILATERAL)
    assert s_def == pytest.approx(0, abs=1e-12)
    assert s_ext == pytest.approx(s_abc, rel=1e-9)


@pytest.mark.parametrize(
    "t, which, expected",
    [
        (WORKED, "def", Fr(1, 4)),
        (WORKED, "ext", Fr(5, 4)),
        (RIGHT_345, "def", Fr(193, 576)),
        (RIGHT_345, "ext", Fr(769, 576)),
        (SCALENE, "def", Fr(481, 2304)),
    ],
)
def test_similarity_ratios(t, which, expected):
    assert naka.similarity_ratio_sq_complex(t, which) == expected


def test_metric_ratio_hand_values():
    # (8/8)^2 - 3/4 and (50/48)^2 - 3/4
    assert naka.similarity_ratio_sq_metric(WORKED) == Fr(1, 4)
    assert naka.similarity_ratio_sq_metric(RIGHT_345) == Fr(193, 576)


def test_is_equilateral_sigma_exact():
    assert not naka.is_equilateral_sigma(WORKED)
    _, (al, be, ga) = naka.circumcenter_frame(WORKED)
    assert naka.sigma_poly(al, be, ga) == 2


def test_aux_points_worked():
    aux = naka.aux_points(WORKED)
    assert aux.o == P(0, 0)
    assert aux.o_prime == P(-1, 1)
    # D coincides with O here; that is allowed
    assert naka.naka_def_constructive(WORKED).d == aux.o


def test_aux_points_isosceles():
    # CA = CB here, so G lands on O and the pair OG/CA is reported
    t = Triangle(P(0, 0), P(2, 0), P(1, 2))
    comps = naka._aux_components(t)
    assert comps["o"] == P(1, Fr(3, 4))
    bc = K.line_through(t.p2, t.p3)
    assert comps["o_prime"] == K.reflect_across(comps["o"], bc)
    assert comps["g"] == comps["o"]
    assert comps["m"].pair == ("OG", "CA")
    assert bc.contains(comps["n"])


def test_aux_points_names_failing_pair():
    # right angle at A puts O on BC, so O = O' and line OO' does not exist
    with pytest.raises(ConstructionError) as info:
        naka.aux_points(RIGHT_345)
    assert info.value.pair == ("OO'", "BC")
    verdicts = naka.proposition_suite(RIGHT_345)
    assert all(v is True for v in verdicts)


@pytest.mark.parametrize("t", [SCALENE, Triangle(P(0, 0), P(5, 1), P(2, 7)), WORKED])
def test_proposition_suite(t):
    assert naka.proposition_suite(t).all_true()


def test_area_additivity_worked():
    assert naka.area_additivity(WORKED) == (1, Fr(1, 4), Fr(5, 4))
    a, b, c = naka.area_additivity(RIGHT_345)
    assert c == a + b


def test_enumeration_worked_contains_extended_triangle():
    found = naka.enumerate_congruent_extended(WORKED)
    target = {P(1, 1), P(Fr(-1, 2), Fr(1, 2)), P(0, -1)}
    assert target in [set(tri) for tri in found]


def test_enumeration_scalene_regression():
    found = naka.enumerate_congruent_extended(SCALENE)
    assert len(found) == 4
    assert found == sorted(found, key=lambda tri: [(p.x, p.y) for p in tri])
    ext = set(naka.extended_points_constructive(SCALENE))
    assert ext in [set(tri) for tri in found]


def test_enumeration_rejects_equilateral():
    with pytest.raises(DegenerateInputError):
        naka.enumerate_congruent_extended(EQUILATERAL)


def test_candidate_set_size():
    cands = naka.extended_candidates(SCALENE)
    # 27 pairs minus the 9 where the perpendicular is parallel to the bisector
    assert len(cands) == 18


def test_report_fields_and_serialization():
    report = naka.naka_report(WORKED)
    d = report.to_dict()
    assert list(d) == [
        "input", "D", "E", "F", "Dp", "Ep", "Fp", "O", "Oprime", "G", "S", "M", "N",
        "ratio_sq_def", "ratio_sq_ext", "areas", "props", "sigma",
    ]
    assert d["D"] == "(0, 0)"
    assert d["E"] == "(-1/2, 1/2)"
    assert d["ratio_sq_def"] == "1/4"
    assert d["areas"] == ["1", "1/4", "5/4"]
    assert d["sigma"] == "2+0*i"
    assert d["props"] == [True] * 6
    assert "ratio_sq_ext: 5/4" in report.to_text()


def test_report_marks_missing_aux_points():
    d = naka.naka_report(RIGHT_345).to_dict()
    assert d["N"] is None
    assert d["O"] == d["Oprime"] == "(2, 3/2)"


# -- properties over random integer triangles ------------------------------------

@settings(max_examples=60, deadline=None)
@given(seeds)
def test_constructive_matches_closed_form(seed):
    t = tri_from_seed(seed)
    assert naka.naka_def_constructive(t) == naka.naka_def_closed_form(t)
    assert naka.extended_points_constructive(t) == naka.extended_points_closed_form(t)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_similarity_and_norm_identity_at_ratio_level(seed):
    t = tri_from_seed(seed)
    k_def = K.similar_sss(t, tuple(naka.naka_def_constructive(t)))
    k_ext = K.similar_sss(t, tuple(naka.extended_points_constructive(t)))
    assert k_def == naka.similarity_ratio_sq_complex(t, "def") == naka.similarity_ratio_sq_metric(t)
    assert k_ext == naka.similarity_ratio_sq_complex(t, "ext") == 1 + k_def


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_side_vector_factorization(seed):
    t = tri_from_seed(seed)
    measured = naka.side_factors(t, "def")
    assert measured == naka.predicted_side_factors(t, "def")
    assert len({z.norm_sq() for z in measured}) == 1
    assert naka.side_factors(t, "ext") == naka.predicted_side_factors(t, "ext")


@settings(max_examples=40, deadline=None)
@given(seeds, st.fractions(min_value=Fr(1, 10), max_value=10, max_denominator=50))
def test_closed_forms_scale_about_circumcenter(seed, lam):
    t = tri_from_seed(seed)
    o = K.circumcenter(t)
    scaled = Triangle(*(P(o.x + lam * (p.x - o.x), o.y + lam * (p.y - o.y)) for p in t))
    for before, after in zip(naka.naka_def_closed_form(t), naka.naka_def_closed_form(scaled)):
        assert after == P(o.x + lam * (before.x - o.x), o.y + lam * (before.y - o.y))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_reflection_relations(seed):
    t = tri_from_seed(seed)
    a, b, c = t
    d, e, f = naka.naka_def_constructive(t)
    dp, ep, fp = naka.extended_points_constructive(t)
    assert dp == K.reflect_across(d, K.line_through(a, b))
    # measured, not claimed: the cyclic analogues hold as well
    assert ep == K.reflect_across(e, K.line_through(b, c))
    assert fp == K.reflect_across(f, K.line_through(c, a))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_similarity_orientation_regression(seed):
    # measured: DEF is an opposite similarity of ABC, D'E'F' a direct one
    t = tri_from_seed(seed)
    assert K.directly_similar(t, tuple(naka.naka_def_constructive(t))) is K.Orientation.OPPOSITE
    assert K.directly_similar(t, tuple(naka.extended_points_constructive(t))) is K.Orientation.DIRECT
