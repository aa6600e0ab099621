"""Residual checks for the area-ratio identity and its supporting chain.

The headline claim is

    E' / E = (cot A + cot B + cot Gamma)^2        (at phi = pi/2)

where E' is the derived-triangle area.  It rests on a small chain of
intermediate identities, each checkable on its own:

  * increment:    E' = E + (gamma^2 cot A + beta^2 cot Gamma + alpha^2 cot B)/2
  * quadratic:    16 E^2 + 8 E (gamma^2 cot A + beta^2 cot Gamma
                  + alpha^2 cot B) - (alpha^2+beta^2+gamma^2)^2 = 0
  * three cot-term identities such as 8 E gamma^2 cot A = 2 gamma^2
    (beta^2 + gamma^2 - alpha^2), which eliminate the cotangents
  * the polynomial expansion of -(alpha^2+beta^2+gamma^2)^2
  * a membership sum: adding the five component identities reproduces the
    quadratic one, which is how the closed form falls out.

Every residual is normalized as |lhs - rhs| / (1 + |rhs|) (or by the stated
dominant term), so tolerances read the same across triangle scales from 1e-2
to 1e2.  Checking every link separately localizes a failure to the first
broken one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .construction import AngleCase, classify_angle, construct
from .geom import Triangle, TriangleMetrics, metrics
from .identities import (
    area_from_cots,
    cot,
    cot_half_angles,
    sixteen_area_squared,
)

#: Strict (main-tier) tolerance per named residual.
STRICT_TOLERANCES: dict[str, float] = {
    "area_increment": 1e-9,
    "sixteen_area_sq": 1e-10,
    "cot_term_a": 1e-9,
    "cot_term_g": 1e-9,
    "cot_term_b": 1e-9,
    "squared_sum_expansion": 1e-12,
    "chain_sum": 1e-9,
    "area_quadratic": 1e-9,
    "half_angle_cots": 1e-9,
    "area_from_cots": 1e-9,
    "area_ratio": 1e-8,
}

#: Order in which sub-identities are blamed when something fails: the chain
#: links first, then the aggregate forms they feed.
CHECK_ORDER: tuple[str, ...] = (
    "area_increment",
    "sixteen_area_sq",
    "cot_term_a",
    "cot_term_g",
    "cot_term_b",
    "squared_sum_expansion",
    "chain_sum",
    "area_quadratic",
    "half_angle_cots",
    "area_from_cots",
    "area_ratio",
)

#: Relaxed tolerance applied uniformly to sliver triangles (see STRESS_MIN_ANGLE).
STRESS_TOLERANCE = 1e-5

#: Triangles whose smallest internal angle is below this (radians) are flagged
#: "stress": residuals are still reported but judged at the relaxed tier.
STRESS_MIN_ANGLE = 0.02


def _norm(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / (1.0 + abs(rhs))


def _cot_side_sum(m: TriangleMetrics) -> float:
    """gamma^2 cot A + beta^2 cot Gamma + alpha^2 cot B (note the pairing)."""
    return (
        m.gamma**2 * cot(m.ang_a)
        + m.beta**2 * cot(m.ang_g)
        + m.alpha**2 * cot(m.ang_b)
    )


def area_ratio_residual(t: Triangle) -> float:
    """|E'/E - (cot sum)^2| / (1 + (cot sum)^2) at phi = pi/2."""
    d = construct(t, 0.5 * math.pi)
    return abs(d.ratio_geometric - d.ratio_formula) / (1.0 + d.ratio_formula)


def area_increment_residual(t: Triangle) -> float:
    """Residual of E' = E + (gamma^2 cot A + beta^2 cot Gamma + alpha^2 cot B)/2."""
    d = construct(t, 0.5 * math.pi)
    m = metrics(t)
    predicted = m.area + 0.5 * _cot_side_sum(m)
    return _norm(d.area_derived, predicted)


def area_quadratic_residual(t: Triangle) -> float:
    """Residual of the quadratic identity, scaled by (alpha^2+beta^2+gamma^2)^2."""
    m = metrics(t)
    sum_sq = m.alpha**2 + m.beta**2 + m.gamma**2
    lhs = 16.0 * m.area**2 + 8.0 * m.area * _cot_side_sum(m) - sum_sq * sum_sq
    return abs(lhs) / (sum_sq * sum_sq)


def _term_residual(lhs: float, w2: float, p2: float, q2: float, r2: float) -> float:
    """Residual of lhs = 2 w2 (p2 + q2 - r2), scaled by the dominant monomial.

    Both sides can cancel to roundoff of the monomials (exactly so near a
    right angle, where the cotangent zero-band zeroes the left side), so the
    honest scale is the largest term entering the identity, not the nearly
    zero difference.
    """
    rhs = 2.0 * w2 * (p2 + q2 - r2)
    dominant = max(abs(lhs), 2.0 * w2 * p2, 2.0 * w2 * q2, 2.0 * w2 * r2)
    return abs(lhs - rhs) / (1.0 + dominant)


def cot_term_residuals(t: Triangle) -> tuple[float, float, float]:
    """Residuals of the three cot-elimination identities.

    8 E gamma^2 cot A = 2 gamma^2 (beta^2 + gamma^2 - alpha^2)
    8 E beta^2  cot G = 2 beta^2  (alpha^2 + beta^2 - gamma^2)
    8 E alpha^2 cot B = 2 alpha^2 (gamma^2 + alpha^2 - beta^2)
    """
    m = metrics(t)
    a2, b2, g2 = m.alpha**2, m.beta**2, m.gamma**2
    e8 = 8.0 * m.area
    r_a = _term_residual(e8 * g2 * cot(m.ang_a), g2, b2, g2, a2)
    r_g = _term_residual(e8 * b2 * cot(m.ang_g), b2, a2, b2, g2)
    r_b = _term_residual(e8 * a2 * cot(m.ang_b), a2, g2, a2, b2)
    return r_a, r_g, r_b


def squared_sum_expansion_residual(alpha: float, beta: float, gamma: float) -> float:
    """Residual of -(a2+b2+g2)^2 = -2(a2 b2 + b2 g2 + g2 a2) - (a2^2+b2^2+g2^2)."""
    a2, b2, g2 = alpha * alpha, beta * beta, gamma * gamma
    sum_sq = a2 + b2 + g2
    lhs = -(sum_sq * sum_sq)
    rhs = -2.0 * (a2 * b2 + b2 * g2 + g2 * a2) - (a2 * a2 + b2 * b2 + g2 * g2)
    return abs(lhs - rhs) / (1.0 + sum_sq * sum_sq)


def chain_sum_residual(t: Triangle) -> float:
    """Add the five component identities memberwise; compare with the quadratic.

    Left side: 16 E^2 + 8 E (cot side sum) - (sum of squared sides)^2 using
    measured area and cotangents.  Right side: the five polynomial right-hand
    sides, which telescope to zero in exact arithmetic.  Agreement replays
    the final step of the derivation numerically.
    """
    m = metrics(t)
    a2, b2, g2 = m.alpha**2, m.beta**2, m.gamma**2
    sum_sq = a2 + b2 + g2
    lhs = 16.0 * m.area**2 + 8.0 * m.area * _cot_side_sum(m) - sum_sq * sum_sq
    rhs = (
        sixteen_area_squared(m.alpha, m.beta, m.gamma)
        + 2.0 * g2 * (b2 + g2 - a2)
        + 2.0 * b2 * (a2 + b2 - g2)
        + 2.0 * a2 * (g2 + a2 - b2)
        - 2.0 * (a2 * b2 + b2 * g2 + g2 * a2)
        - (a2 * a2 + b2 * b2 + g2 * g2)
    )
    return abs(lhs - rhs) / (sum_sq * sum_sq)


@dataclass(frozen=True)
class VerifyReport:
    """One triangle's residuals against their tolerances.

    first_failing names the earliest entry of CHECK_ORDER whose residual
    exceeds its tolerance, or None when everything passes; that is the link
    of the identity chain to suspect first.
    """

    metrics: TriangleMetrics
    case: AngleCase
    stress: bool
    residuals: dict[str, float]
    tolerances: dict[str, float]
    passed: bool
    first_failing: str | None


def identity_report(t: Triangle) -> VerifyReport:
    """Evaluate every identity residual for one triangle and judge it.

    Sliver triangles (smallest angle below STRESS_MIN_ANGLE) are judged at
    the uniform relaxed tolerance and flagged stress=True, because their
    conditioning legitimately amplifies roundoff.
    """
    m = metrics(t)
    d = construct(t, 0.5 * math.pi)

    radical = cot_half_angles(m)
    direct = (
        cot(0.5 * m.ang_a),
        cot(0.5 * m.ang_b),
        cot(0.5 * m.ang_g),
    )
    half_angle_res = max(_norm(r, c) for r, c in zip(radical, direct))

    sixteen = sixteen_area_squared(m.alpha, m.beta, m.gamma)
    r_a, r_g, r_b = cot_term_residuals(t)
    residuals = {
        "area_increment": area_increment_residual(t),
        "sixteen_area_sq": _norm(sixteen, 16.0 * m.area**2),
        "cot_term_a": r_a,
        "cot_term_g": r_g,
        "cot_term_b": r_b,
        "squared_sum_expansion": squared_sum_expansion_residual(
            m.alpha, m.beta, m.gamma
        ),
        "chain_sum": chain_sum_residual(t),
        "area_quadratic": area_quadratic_residual(t),
        "half_angle_cots": half_angle_res,
        "area_from_cots": _norm(area_from_cots(m), m.area),
        "area_ratio": abs(d.ratio_geometric - d.ratio_formula)
        / (1.0 + d.ratio_formula),
    }

    stress = min(m.ang_a, m.ang_b, m.ang_g) < STRESS_MIN_ANGLE
    if stress:
        tolerances = {name: STRESS_TOLERANCE for name in CHECK_ORDER}
    else:
        tolerances = dict(STRICT_TOLERANCES)

    first_failing = None
    for name in CHECK_ORDER:
        if residuals[name] > tolerances[name]:
            first_failing = name
            break

    return VerifyReport(
        metrics=m,
        case=classify_angle(m.ang_a),
        stress=stress,
        residuals=residuals,
        tolerances=tolerances,
        passed=first_failing is None,
        first_failing=first_failing,
    )


__all__ = [
    "CHECK_ORDER",
    "STRESS_MIN_ANGLE",
    "STRESS_TOLERANCE",
    "STRICT_TOLERANCES",
    "VerifyReport",
    "area_increment_residual",
    "area_quadratic_residual",
    "area_ratio_residual",
    "chain_sum_residual",
    "cot_term_residuals",
    "identity_report",
    "squared_sum_expansion_residual",
]
