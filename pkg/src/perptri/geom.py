"""Plane geometry primitives: points, lines in normal form, triangles, metrics.

Angles are radians everywhere in the library; degrees exist only at the CLI
boundary.  All arithmetic is plain binary64 floating point -- identities built
on these primitives are verified to tolerance, never symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTriangleError, ParallelLinesError, ZeroDirectionError

#: A triangle is rejected as degenerate when its area falls below this factor
#: times the squared longest side (scale invariant: both sides are length^2).
DEGENERACY_FACTOR = 1e-9

#: Unit-normal cross products below this magnitude count as parallel.
PARALLEL_EPS = 1e-12

#: Direction vectors shorter than this count as zero.
ZERO_DIRECTION_EPS = 1e-12


def clamp_unit(value: float) -> float:
    """Clamp into [-1, 1]; guards acos against roundoff just outside range."""
    return max(-1.0, min(1.0, value))


@dataclass(frozen=True)
class Point2:
    """A 2-D point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def dist(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


def cross(o: Point2, p: Point2, q: Point2) -> float:
    """Cross product (p - o) x (q - o); twice the signed area of (o, p, q)."""
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)


def signed_area(p: Point2, q: Point2, s: Point2) -> float:
    """Signed triangle area; positive iff p, q, s wind counterclockwise."""
    return 0.5 * cross(p, q, s)


@dataclass(frozen=True)
class Line2:
    """Infinite line {(x, y) : a*x + b*y = c} with unit normal (a, b)."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if abs(self.a * self.a + self.b * self.b - 1.0) > 1e-12:
            raise ValueError("line coefficients must satisfy a^2 + b^2 = 1")

    @classmethod
    def through(cls, p: Point2, dx: float, dy: float) -> Line2:
        """Line through p with direction (dx, dy)."""
        norm = math.hypot(dx, dy)
        if norm < ZERO_DIRECTION_EPS:
            raise ZeroDirectionError("cannot build a line from a zero direction")
        a = -dy / norm
        b = dx / norm
        return cls(a, b, a * p.x + b * p.y)

    def distance_to(self, p: Point2) -> float:
        """Unsigned distance from p; the unit normal makes the residual metric."""
        return abs(self.a * p.x + self.b * p.y - self.c)

    def direction(self) -> tuple[float, float]:
        """A unit direction vector along the line."""
        return self.b, -self.a


def rotate_dir(dx: float, dy: float, phi: float) -> tuple[float, float]:
    """Rotate the vector (dx, dy) by +phi, counterclockwise."""
    c, s = math.cos(phi), math.sin(phi)
    return c * dx - s * dy, s * dx + c * dy


def line_through_at_angle(p: Point2, tail: Point2, head: Point2, phi: float) -> Line2:
    """Line through p along the direction tail -> head rotated by +phi.

    Callers are expected to feed counterclockwise-oriented triangles so the
    positive rotation sense is meaningful; at phi = pi/2 the result is the
    perpendicular, which is orientation independent.
    """
    dx = head.x - tail.x
    dy = head.y - tail.y
    if math.hypot(dx, dy) < ZERO_DIRECTION_EPS:
        raise ZeroDirectionError("segment endpoints coincide; direction undefined")
    rx, ry = rotate_dir(dx, dy, phi)
    return Line2.through(p, rx, ry)


def intersect(l1: Line2, l2: Line2) -> Point2:
    """The unique intersection point of two non-parallel lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) < PARALLEL_EPS:
        raise ParallelLinesError("lines are parallel within tolerance")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point2(x, y)


@dataclass(frozen=True)
class Triangle:
    """Vertices A, B, Gamma of a non-degenerate triangle.

    Vertices are stored counterclockwise: clockwise input has b and g swapped
    on construction so every rotation sense downstream is uniform.  The swap
    relabels the triangle (beta <-> gamma, angle B <-> angle Gamma); every
    quantity verified by this package is symmetric under that relabeling.
    """

    a: Point2
    b: Point2
    g: Point2

    def __post_init__(self) -> None:
        doubled = cross(self.a, self.b, self.g)
        longest_sq = max(
            (self.b.x - self.a.x) ** 2 + (self.b.y - self.a.y) ** 2,
            (self.g.x - self.b.x) ** 2 + (self.g.y - self.b.y) ** 2,
            (self.a.x - self.g.x) ** 2 + (self.a.y - self.g.y) ** 2,
        )
        if abs(doubled) < 2.0 * DEGENERACY_FACTOR * longest_sq:
            raise DegenerateTriangleError(
                "vertices are collinear at the triangle's own scale"
            )
        if doubled < 0.0:
            b, g = self.b, self.g
            object.__setattr__(self, "b", g)
            object.__setattr__(self, "g", b)

    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return self.a, self.b, self.g

    def longest_side(self) -> float:
        return max(self.a.dist(self.b), self.b.dist(self.g), self.g.dist(self.a))


@dataclass(frozen=True)
class TriangleMetrics:
    """Scalar summary of a triangle.

    alpha = |B Gamma|, beta = |Gamma A|, gamma = |A B|: each side faces the
    like-named angle.  s is the semi-perimeter (2s = alpha + beta + gamma) and
    area comes from the shoelace formula, which serves as the geometric
    reference value for every analytic area route.
    """

    alpha: float
    beta: float
    gamma: float
    ang_a: float
    ang_b: float
    ang_g: float
    s: float
    area: float


def metrics(t: Triangle) -> TriangleMetrics:
    """Side lengths by distance, angles by the Law of Cosines (acos clamped)."""
    alpha = t.b.dist(t.g)
    beta = t.g.dist(t.a)
    gamma = t.a.dist(t.b)
    a2, b2, g2 = alpha * alpha, beta * beta, gamma * gamma
    ang_a = math.acos(clamp_unit((b2 + g2 - a2) / (2.0 * beta * gamma)))
    ang_b = math.acos(clamp_unit((a2 + g2 - b2) / (2.0 * alpha * gamma)))
    ang_g = math.acos(clamp_unit((a2 + b2 - g2) / (2.0 * alpha * beta)))
    s = 0.5 * (alpha + beta + gamma)
    area = abs(signed_area(t.a, t.b, t.g))
    return TriangleMetrics(alpha, beta, gamma, ang_a, ang_b, ang_g, s, area)


def angle_at(vertex: Point2, p: Point2, q: Point2) -> float:
    """Interior angle at `vertex` of the triangle (vertex, p, q)."""
    ux, uy = p.x - vertex.x, p.y - vertex.y
    vx, vy = q.x - vertex.x, q.y - vertex.y
    nu = math.hypot(ux, uy)
    nv = math.hypot(vx, vy)
    if nu < ZERO_DIRECTION_EPS or nv < ZERO_DIRECTION_EPS:
        raise ZeroDirectionError("angle undefined at coincident points")
    return math.acos(clamp_unit((ux * vx + uy * vy) / (nu * nv)))
