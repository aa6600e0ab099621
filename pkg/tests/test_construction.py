"""The derived-triangle construction: frozen vertices, cases, similarity."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perptri.construction import (
    AngleCase,
    classify_angle,
    construct,
    similarity_check,
)
from perptri.errors import PhiRangeError
from perptri.geom import Point2, Triangle, metrics

SQRT3 = math.sqrt(3.0)
HALF_PI = 0.5 * math.pi


def test_classify_angle():
    assert classify_angle(1.0) is AngleCase.ACUTE
    assert classify_angle(HALF_PI) is AngleCase.RIGHT
    assert classify_angle(HALF_PI + 1e-12) is AngleCase.RIGHT
    assert classify_angle(2.0) is AngleCase.OBTUSE


def test_phi_out_of_range_raises(t345):
    for phi in (0.0, -0.3, HALF_PI + 1e-6, math.pi):
        with pytest.raises(PhiRangeError):
            construct(t345, phi)


# ---------------------------------------------------------------------------
# frozen constructions (exact values derived by hand for each case)
# ---------------------------------------------------------------------------

def test_right_case_345(t345):
    d = construct(t345)
    assert d.case is AngleCase.RIGHT
    assert d.ap.x == pytest.approx(4.0, abs=1e-12)
    assert d.ap.y == pytest.approx(25.0 / 3.0, abs=1e-12)
    assert d.bp.x == pytest.approx(-9.0 / 4.0, abs=1e-12)
    assert d.bp.y == pytest.approx(0.0, abs=1e-12)
    # Gamma' lands exactly on B when angle A is right
    assert d.gp.x == pytest.approx(4.0, abs=1e-12)
    assert d.gp.y == pytest.approx(0.0, abs=1e-12)
    assert d.area_derived == pytest.approx(625.0 / 24.0, rel=1e-13)
    assert d.ratio_geometric == pytest.approx(625.0 / 144.0, rel=1e-12)
    assert d.ratio_formula == pytest.approx(625.0 / 144.0, rel=1e-12)


def test_acute_case_equilateral(equilateral):
    d = construct(equilateral)
    assert d.case is AngleCase.ACUTE
    assert d.ap.x == pytest.approx(1.0, abs=1e-13)
    assert d.ap.y == pytest.approx(2.0 * SQRT3 / 3.0, abs=1e-13)
    assert d.bp.x == pytest.approx(-0.5, abs=1e-13)
    assert d.bp.y == pytest.approx(SQRT3 / 6.0, abs=1e-13)
    assert d.gp.x == pytest.approx(1.0, abs=1e-13)
    assert d.gp.y == pytest.approx(-SQRT3 / 3.0, abs=1e-13)
    assert d.ratio_geometric == pytest.approx(3.0, rel=1e-12)
    assert d.ratio_formula == pytest.approx(3.0, rel=1e-12)


def test_obtuse_case_120_30_30(obtuse_iso):
    d = construct(obtuse_iso)
    assert d.case is AngleCase.OBTUSE
    assert d.ap.x == pytest.approx(1.0, abs=1e-12)
    assert d.ap.y == pytest.approx(2.0 * SQRT3, abs=1e-12)
    assert d.bp.x == pytest.approx(-1.5, abs=1e-12)
    assert d.bp.y == pytest.approx(-SQRT3 / 2.0, abs=1e-12)
    assert d.gp.x == pytest.approx(1.0, abs=1e-12)
    assert d.gp.y == pytest.approx(SQRT3 / 3.0, abs=1e-12)
    assert d.area_derived == pytest.approx(25.0 * SQRT3 / 12.0, rel=1e-12)
    assert d.ratio_geometric == pytest.approx(25.0 / 3.0, rel=1e-12)
    assert d.ratio_formula == pytest.approx(25.0 / 3.0, rel=1e-12)


def test_lines_pass_through_their_anchors(t345):
    d = construct(t345)
    scale = t345.longest_side()
    assert d.line_ab.distance_to(t345.b) < 1e-13 * scale
    assert d.line_bg.distance_to(t345.g) < 1e-13 * scale
    assert d.line_ga.distance_to(t345.a) < 1e-13 * scale
    # each derived vertex sits on both of its defining lines
    assert d.line_ab.distance_to(d.ap) < 1e-12 * scale
    assert d.line_bg.distance_to(d.ap) < 1e-12 * scale
    assert d.line_bg.distance_to(d.bp) < 1e-12 * scale
    assert d.line_ga.distance_to(d.bp) < 1e-12 * scale
    assert d.line_ga.distance_to(d.gp) < 1e-12 * scale
    assert d.line_ab.distance_to(d.gp) < 1e-12 * scale


def test_perpendicularity_at_phi_90(equilateral):
    d = construct(equilateral)
    side = (
        equilateral.b.x - equilateral.a.x,
        equilateral.b.y - equilateral.a.y,
    )
    dx, dy = d.line_ab.direction()
    assert abs(side[0] * dx + side[1] * dy) < 1e-14


# ---------------------------------------------------------------------------
# similarity: angle A' = B, B' = Gamma, Gamma' = A for every phi
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("phi", [math.pi / 6, math.pi / 4, math.pi / 3, 0.45 * math.pi, HALF_PI])
def test_similarity_scalene(phi):
    t = Triangle(Point2(0.0, 0.0), Point2(4.0, 0.0), Point2(1.0, 3.0))
    disc = similarity_check(t, construct(t, phi))
    assert max(disc) < 1e-9


@pytest.mark.parametrize("phi", [0.2, 1.0, HALF_PI])
def test_similarity_all_cases(t345, equilateral, obtuse_iso, phi):
    for t in (t345, equilateral, obtuse_iso):
        disc = similarity_check(t, construct(t, phi))
        assert max(disc) < 1e-9


def test_small_phi_keeps_ratio_near_one(equilateral):
    # As phi -> 0 the rotated lines slide back onto the sides and the derived
    # triangle collapses onto the source.
    d = construct(equilateral, 1e-4)
    assert d.ratio_geometric == pytest.approx(1.0, abs=1e-3)


# ---------------------------------------------------------------------------
# invariances
# ---------------------------------------------------------------------------

@given(s=st.floats(min_value=0.01, max_value=100.0))
@settings(max_examples=50, deadline=None)
def test_ratio_is_scale_invariant(s):
    base = Triangle(Point2(0.0, 0.0), Point2(4.0, 0.0), Point2(1.0, 3.0))
    scaled = Triangle(
        Point2(0.0, 0.0), Point2(4.0 * s, 0.0), Point2(1.0 * s, 3.0 * s)
    )
    r0 = construct(base).ratio_geometric
    r1 = construct(scaled).ratio_geometric
    assert r1 == pytest.approx(r0, rel=1e-10)


def test_derived_area_scales_quadratically():
    base = Triangle(Point2(0.0, 0.0), Point2(4.0, 0.0), Point2(1.0, 3.0))
    scaled = Triangle(Point2(0.0, 0.0), Point2(8.0, 0.0), Point2(2.0, 6.0))
    assert construct(scaled).area_derived == pytest.approx(
        4.0 * construct(base).area_derived, rel=1e-12
    )


def test_construction_records_inputs(t345):
    d = construct(t345, 1.0)
    assert d.source is t345
    assert d.phi == 1.0
    assert metrics(t345).area == pytest.approx(6.0)
