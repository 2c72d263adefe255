"""Hyperbolic semantics on the open unit disk (projective disk model).

All incidence logic (orthogonality, perpendiculars, reflections) is
exact; distances are the only irrational quantities and are evaluated in
double precision after the exact construction.
"""

from __future__ import annotations

import math

from .conic import (
    Chord,
    IdealPoint,
    UNIT_CIRCLE,
    classify,
    pole,
    polar,
    quadratic_form,
)
from .errors import MeetInsideDisk, MeetOnCircle, NotInterior
from .projective import ProjMap, ProjPoint, join, meet

#: default tolerance for numeric distance comparisons
EPSILON = 1e-12


class HPoint:
    """A point strictly interior to the unit disk."""

    __slots__ = ("point",)

    def __init__(self, p: ProjPoint):
        if quadratic_form(UNIT_CIRCLE, p) >= 0:
            raise NotInterior(f"{p} is not inside the unit disk")
        self.point = p

    @classmethod
    def at(cls, x, y) -> "HPoint":
        return cls(ProjPoint(x, y, 1))

    def __eq__(self, other):
        return isinstance(other, HPoint) and self.point == other.point

    def __hash__(self):
        return hash(("hpt", self.point.coords))

    def __repr__(self):
        return f"HPoint({self.point})"


def hilbert_distance(p: HPoint, q: HPoint) -> float:
    """Half the log of the boundary cross-ratio bracket along line pq.

    The chord endpoints are generally irrational, so the bracket is
    evaluated in floating point: parametrize the segment as p + t*(q-p),
    find the boundary parameters ta < 0 and tb > 1, and take
    0.5*log of the (absolute) four-point ratio.
    """
    if p == q:
        return 0.0
    px, py = p.point.affine()
    qx, qy = q.point.affine()
    dx, dy = qx - px, qy - py
    # exact rational coefficients of |p + t(q-p)|^2 = 1 avoid the
    # cancellation that plagues near-boundary inputs
    aa = dx * dx + dy * dy
    bb = 2 * (px * dx + py * dy)
    cc = px * px + py * py - 1
    s = math.sqrt(bb * bb - 4 * aa * cc)
    fa, fb, fc = float(aa), float(bb), float(cc)
    half = -(fb + s) / 2.0 if fb >= 0 else -(fb - s) / 2.0
    r1, r2 = half / fa, fc / half
    ta, tb = min(r1, r2), max(r1, r2)  # ta < 0 < 1 < tb
    u = 1.0 - ta
    # Vieta: (1 - ta)(1 - tb) = (aa + bb + cc)/aa, exactly |q|^2 - 1 scaled
    v = float((aa + bb + cc) / aa) / u
    ratio = (tb * u) / (ta * v)
    return 0.5 * math.log(abs(ratio))


def is_orthogonal(l: Chord, m: Chord) -> bool:
    """Orthogonality: the pole of one chord lies on the other's line."""
    forward = m.line.contains(pole(UNIT_CIRCLE, l.line))
    backward = l.line.contains(pole(UNIT_CIRCLE, m.line))
    assert forward == backward, "orthogonality must be symmetric"
    return forward


def chords_cross_inside(l: Chord, m: Chord) -> bool:
    """Whether two distinct chords meet in the open disk."""
    return classify(UNIT_CIRCLE, meet(l.line, m.line)) < 0


def common_perpendicular(l: Chord, m: Chord) -> Chord:
    """The unique chord orthogonal to two disjoint chords.

    It is the polar line of their (exterior) intersection point; crossing
    chords have no common perpendicular and asymptotic chords meet on the
    circle, each rejected with its own error.
    """
    x = meet(l.line, m.line)
    side = classify(UNIT_CIRCLE, x)
    if side < 0:
        raise MeetInsideDisk(f"chords cross in the disk at {x}")
    if side == 0:
        raise MeetOnCircle(f"chords are asymptotic at {x}")
    return Chord(polar(UNIT_CIRCLE, x))


class Reflection:
    """Hyperbolic reflection across a chord, as a harmonic homology.

    The matrix is I - 2*(p l^T)/(l^T p) with p the pole of the axis: an
    involution (up to scale) preserving the circle, fixing the axis
    pointwise and fixing the pole.
    """

    __slots__ = ("axis", "map")

    def __init__(self, axis: Chord):
        l = axis.line.coords
        p = pole(UNIT_CIRCLE, axis.line).coords
        lp = sum(l[i] * p[i] for i in range(3))
        rows = tuple(
            tuple(
                (lp if r == c else 0) - 2 * p[r] * l[c] for c in range(3)
            )
            for r in range(3)
        )
        self.axis = axis
        self.map = ProjMap(rows)

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        return self.map.apply_point(p)

    def apply_ideal(self, a: IdealPoint) -> IdealPoint:
        return IdealPoint(self.map.apply_point(a.point))

    def apply_chord(self, l: Chord) -> Chord:
        return Chord(self.map.apply_line(l.line))

    def __repr__(self):
        return f"Reflection(axis={self.axis})"


def reflection_across_chord(l: Chord) -> Reflection:
    return Reflection(l)


def bisector_of_ideal_quadrilateral(
    a: IdealPoint, b: IdealPoint, d: IdealPoint, e: IdealPoint
) -> Chord:
    """Common perpendicular of AB and DE for a convex ideal quadrilateral.

    The reflection across the result swaps A with B and D with E, which
    makes it the bisector of the crossing lines AD and BE.
    """
    return common_perpendicular(Chord.through(a, b), Chord.through(d, e))


def point_to_chord_distance(p: HPoint, l: Chord) -> float:
    """Distance from an interior point to a chord via the exact foot.

    The perpendicular from p is the line joining p to the pole of l; its
    meet with l is rational, so only the final distance is numeric.
    """
    q = pole(UNIT_CIRCLE, l.line)
    if l.line.contains(p.point):
        return 0.0
    foot = meet(join(p.point, q), l.line)
    return hilbert_distance(p, HPoint(foot))
