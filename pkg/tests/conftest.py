"""Shared fixtures: the three canonical triangles used across the suite.

Each one pins a qualitative case of the construction (acute, right, obtuse
angle A) and has exact rational/radical metrics, so expected values in tests
are frozen numbers rather than recomputations.
"""

import math

import pytest

from perptri.geom import Point2, Triangle


@pytest.fixture
def t345() -> Triangle:
    """Right angle at A; sides alpha=5, beta=3, gamma=4; area 6."""
    return Triangle(Point2(0.0, 0.0), Point2(4.0, 0.0), Point2(0.0, 3.0))


@pytest.fixture
def equilateral() -> Triangle:
    """Unit side, counterclockwise; area sqrt(3)/4."""
    return Triangle(
        Point2(0.0, 0.0),
        Point2(1.0, 0.0),
        Point2(0.5, 0.5 * math.sqrt(3.0)),
    )


@pytest.fixture
def obtuse_iso() -> Triangle:
    """120 degrees at A, 30 at B and Gamma; |AB| = |A Gamma| = 1."""
    return Triangle(
        Point2(0.0, 0.0),
        Point2(1.0, 0.0),
        Point2(-0.5, 0.5 * math.sqrt(3.0)),
    )
