"""Tangent-secant scenes and the golden configuration.

A scene is: an external point, a circle, the tangent from the point, and a
secant from the same point crossing the circle twice.  Three positive
lengths pin it down up to congruence -- the stretch of secant outside the
circle, the chord the secant cuts, and the radius.  The power of the
external point ties the tangent length a to the secant pieces by
a^2 = b*(b + c), and the special case where the tangent equals the chord
turns out to be exactly the case where the tangent divides lengths in the
golden ratio.  This module checks that equivalence numerically and also
realizes scenes as planar coordinates so angles and chords can be measured
off them.

Coordinate convention for :func:`realize`: the external point sits at the
origin, the secant runs along the positive x axis, the circle's center
hangs below the secant line (on it when the chord is a diameter), and the
tangent point -- the upper of the two candidates -- lands above.  All
measurement helpers consume that fixed frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .exactfield import PHI_FLOAT

Point = tuple[float, float]


class GeometryError(ValueError):
    """Raised when lengths cannot describe a valid tangent-secant scene."""


@dataclass(frozen=True)
class TangentSecantConfig:
    """Scalar description of a tangent-secant scene.

    ``outside_secant`` is the distance from the external point to the near
    intersection, ``chord`` the distance between the two intersections, and
    ``radius`` the circle's radius.  The remaining lengths are derived:
    the full secant, the tangent length (via the power of the point), and
    the distance from the external point to the center.
    """

    outside_secant: float
    chord: float
    radius: float

    def __post_init__(self) -> None:
        for name in ("outside_secant", "chord", "radius"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or not value > 0.0:
                raise GeometryError(
                    f"invalid length: {name}={getattr(self, name)!r} "
                    f"(each length must be finite and positive)"
                )
            object.__setattr__(self, name, value)
        if self.chord > 2.0 * self.radius:
            raise GeometryError(
                f"chord exceeds diameter: chord={self.chord} > {2.0 * self.radius}"
            )

    @property
    def secant_length(self) -> float:
        """Distance from the external point to the far intersection."""
        return self.outside_secant + self.chord

    @property
    def tangent_length(self) -> float:
        """Length of the tangent segment, sqrt(b*(b+c)) by the power of the point."""
        return math.sqrt(self.outside_secant * self.secant_length)

    @property
    def center_distance(self) -> float:
        """Distance from the external point to the center (tangent and radius are
        perpendicular, so this is the hypotenuse over them)."""
        return math.hypot(self.tangent_length, self.radius)


def golden_config(chord: float, radius: float) -> TangentSecantConfig:
    """Scene whose tangent equals its chord.

    Choosing the outside stretch as chord/phi makes the tangent length come
    out equal to the chord, and the golden run of ratios
    secant/tangent = tangent/outside = phi follows.
    """
    return TangentSecantConfig(chord / PHI_FLOAT, chord, radius)


class TheoremCheck(NamedTuple):
    """The two sides of the equivalence, each judged at a tolerance."""

    chord_equals_tangent: bool
    ratio_is_golden: bool


DEFAULT_EQUIVALENCE_TOL = 1e-9


def theorem_check(
    config: TangentSecantConfig, tol: float = DEFAULT_EQUIVALENCE_TOL
) -> TheoremCheck:
    """Judge both sides of chord == tangent  <=>  tangent/outside == phi.

    Both comparisons are relative at ``tol``.  Geometry makes the booleans
    agree for every valid scene, so a disagreement indicates a bug rather
    than an exotic input.
    """
    tangent = config.tangent_length
    chord_side = abs(config.chord - tangent) <= tol * tangent
    ratio_side = abs(tangent / config.outside_secant - PHI_FLOAT) <= tol * PHI_FLOAT
    return TheoremCheck(chord_equals_tangent=chord_side, ratio_is_golden=ratio_side)


@dataclass(frozen=True)
class Realization:
    """Planar coordinates of a scene under the fixed frame.

    ``chord_near`` and ``chord_far`` are the circle chords joining the
    tangent point to the near and far secant intersections; for a golden
    scene their ratio is phi again.
    """

    external_point: Point
    near_point: Point
    far_point: Point
    center: Point
    tangent_point: Point
    chord_near: float
    chord_far: float


def realize(config: TangentSecantConfig) -> Realization:
    """Place a scene in the plane.

    The center goes to (b + c/2, -h) with h = sqrt(r^2 - (c/2)^2), putting
    it below the secant; h degenerates to 0 exactly when the chord is a
    diameter.  Of the two tangent points from the origin the one above the
    secant is kept (the lower one is the mirror scene and is discarded).
    Its coordinates come from scaling the unit vector toward the center by
    a^2/d and adding the perpendicular component a*r/d.
    """
    b, c, r = config.outside_secant, config.chord, config.radius
    a = config.tangent_length
    d = config.center_distance
    half_gap = r * r - (c / 2.0) ** 2
    h = math.sqrt(half_gap) if half_gap > 0.0 else 0.0
    center = (b + c / 2.0, -h)
    ux, uy = center[0] / d, center[1] / d
    tangent_point = (
        (a * a * ux - a * r * uy) / d,
        (a * a * uy + a * r * ux) / d,
    )
    near = (b, 0.0)
    far = (b + c, 0.0)
    return Realization(
        external_point=(0.0, 0.0),
        near_point=near,
        far_point=far,
        center=center,
        tangent_point=tangent_point,
        chord_near=math.dist(tangent_point, near),
        chord_far=math.dist(tangent_point, far),
    )


class AngleTriple(NamedTuple):
    """Interior angles (radians) of the tangent-secant triangle.

    ``alpha`` at the external point between tangent and secant, ``beta`` at
    the far intersection, ``gamma`` at the tangent point.
    """

    alpha: float
    beta: float
    gamma: float


def _angle_at(vertex: Point, toward_first: Point, toward_second: Point) -> float:
    v1 = (toward_first[0] - vertex[0], toward_first[1] - vertex[1])
    v2 = (toward_second[0] - vertex[0], toward_second[1] - vertex[1])
    cross = v1[0] * v2[1] - v1[1] * v2[0]
    dot = v1[0] * v2[0] + v1[1] * v2[1]
    return math.atan2(abs(cross), dot)


def measure_angles(realization: Realization) -> AngleTriple:
    """Read the triangle's angles off the coordinates.

    Uses atan2 of cross and dot products, which stays accurate for thin
    triangles where an arccos of a dot product would lose digits.
    """
    p = realization.external_point
    t = realization.tangent_point
    y = realization.far_point
    return AngleTriple(
        alpha=_angle_at(p, t, y),
        beta=_angle_at(y, p, t),
        gamma=_angle_at(t, p, y),
    )


class ChordPair(NamedTuple):
    near: float
    far: float


def measure_chords(realization: Realization) -> ChordPair:
    """Chords from the tangent point to the two secant intersections."""
    return ChordPair(
        near=math.dist(realization.tangent_point, realization.near_point),
        far=math.dist(realization.tangent_point, realization.far_point),
    )
