"""Exact projective primitives over arbitrary-precision rationals.

Points and lines are homogeneous triples stored in a canonical integer
form (coprime entries, fixed sign convention), so up-to-scale equality is
plain tuple equality and every determinant witness is reproducible bit
for bit across runs and platforms.

Sign conventions:

* points: the last nonzero coordinate is positive, so finite points have
  w > 0 and an unambiguous affine representative;
* lines (a, b, c): c < 0 when c != 0, otherwise the last nonzero
  coefficient is positive.  This pairing makes the pole/polar
  correspondence of the unit circle map canonical points to canonical
  lines and back.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    DegenerateConfiguration,
    EqualLines,
    EqualPoints,
    NotCollinear,
    SingularMap,
)

Rat = Fraction

Triple = tuple[int, int, int]


def _reduced_ints(triple: Sequence) -> list[int]:
    """Scale a rational triple to coprime integers (sign untouched)."""
    fracs = [Fraction(v) for v in triple]
    if not any(fracs):
        raise ValueError("homogeneous triple must be nonzero")
    scale = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * scale) for f in fracs]
    g = math.gcd(*ints)
    return [v // g for v in ints]


def _cross(u: Sequence[int], v: Sequence[int]) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _det3(u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> int:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


class ProjPoint:
    """A projective point as a canonical homogeneous integer triple."""

    __slots__ = ("coords",)

    def __init__(self, x, y, w):
        ints = _reduced_ints((x, y, w))
        # last nonzero coordinate positive
        for v in reversed(ints):
            if v:
                if v < 0:
                    ints = [-u for u in ints]
                break
        self.coords: Triple = tuple(ints)

    @property
    def x(self) -> int:
        return self.coords[0]

    @property
    def y(self) -> int:
        return self.coords[1]

    @property
    def w(self) -> int:
        return self.coords[2]

    @property
    def at_infinity(self) -> bool:
        return self.coords[2] == 0

    def affine(self) -> tuple[Rat, Rat]:
        """Exact affine coordinates; requires w != 0."""
        if self.at_infinity:
            raise ValueError("point at infinity has no affine coordinates")
        return Fraction(self.x, self.w), Fraction(self.y, self.w)

    def affine_floats(self) -> tuple[float, float]:
        if self.at_infinity:
            raise ValueError("point at infinity has no affine coordinates")
        return self.x / self.w, self.y / self.w

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(("pt", self.coords))

    def __repr__(self):
        return f"ProjPoint{self.coords}"


class ProjLine:
    """A projective line a*x + b*y + c*w = 0 in canonical integer form."""

    __slots__ = ("coords",)

    def __init__(self, a, b, c):
        ints = _reduced_ints((a, b, c))
        if ints[2]:
            if ints[2] > 0:
                ints = [-u for u in ints]
        else:
            for v in reversed(ints):
                if v:
                    if v < 0:
                        ints = [-u for u in ints]
                    break
        self.coords: Triple = tuple(ints)

    @property
    def a(self) -> int:
        return self.coords[0]

    @property
    def b(self) -> int:
        return self.coords[1]

    @property
    def c(self) -> int:
        return self.coords[2]

    def eval_at(self, p: ProjPoint) -> int:
        """Incidence form on canonical representatives (sign-stable)."""
        u, v = self.coords, p.coords
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]

    def contains(self, p: ProjPoint) -> bool:
        return self.eval_at(p) == 0

    def __eq__(self, other):
        return isinstance(other, ProjLine) and self.coords == other.coords

    def __hash__(self):
        return hash(("ln", self.coords))

    def __repr__(self):
        return f"ProjLine{self.coords}"


def point(x, y) -> ProjPoint:
    """Affine shorthand: point(x, y) = ProjPoint(x, y, 1)."""
    return ProjPoint(x, y, 1)


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points (cross product)."""
    if p == q:
        raise EqualPoints(f"join of equal points {p}")
    return ProjLine(*_cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines (dual cross product).

    A point at infinity (w = 0) is a legal result for parallel lines.
    """
    if l == m:
        raise EqualLines(f"meet of equal lines {l}")
    return ProjPoint(*_cross(l.coords, m.coords))


class Certified(NamedTuple):
    """Boolean predicate outcome plus the exact determinant witness."""

    ok: bool
    witness: Rat

    def __bool__(self):
        return self.ok


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> Certified:
    """Exact collinearity with the determinant of canonical triples."""
    det = _det3(p.coords, q.coords, r.coords)
    return Certified(det == 0, Fraction(det))


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> Certified:
    """Exact concurrency with the determinant of canonical triples."""
    det = _det3(l.coords, m.coords, n.coords)
    return Certified(det == 0, Fraction(det))


def _det2(u: Triple, v: Triple, i: int, j: int) -> int:
    return u[i] * v[j] - u[j] * v[i]


def cross_ratio(a: ProjPoint, b: ProjPoint, p: ProjPoint, q: ProjPoint) -> Rat:
    """Signed ratio (BP/BQ)*(AQ/AP) of four collinear points.

    Signed lengths are taken via an affine parametrization of the common
    line; the value is parametrization independent and also well defined
    when some of the points are at infinity.  Returns 1 when p == q.
    """
    if a == b:
        raise EqualPoints("cross_ratio needs a != b")
    line = join(a, b)
    if not (line.contains(p) and line.contains(q)):
        raise NotCollinear(f"{p} or {q} not on line {line}")
    # project out a coordinate where the line has a nonzero coefficient
    k = next(i for i, v in enumerate(line.coords) if v)
    i, j = [idx for idx in range(3) if idx != k]
    num = _det2(b.coords, p.coords, i, j) * _det2(a.coords, q.coords, i, j)
    den = _det2(b.coords, q.coords, i, j) * _det2(a.coords, p.coords, i, j)
    if den == 0:
        raise DegenerateConfiguration("zero signed length in cross-ratio")
    return Fraction(num, den)


class ProjMap:
    """An invertible projective transformation (3x3 rational matrix)."""

    __slots__ = ("rows", "det")

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("ProjMap needs a 3x3 matrix")
        m = self.rows
        self.det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if self.det == 0:
            raise SingularMap("projective map must be invertible")

    @staticmethod
    def identity() -> "ProjMap":
        return ProjMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def _cofactor(self):
        # cyclic index form: signs are already built into the ordering
        m = self.rows
        return tuple(
            tuple(
                m[(r + 1) % 3][(c + 1) % 3] * m[(r + 2) % 3][(c + 2) % 3]
                - m[(r + 1) % 3][(c + 2) % 3] * m[(r + 2) % 3][(c + 1) % 3]
                for c in range(3)
            )
            for r in range(3)
        )

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        v = p.coords
        return ProjPoint(*(sum(row[i] * v[i] for i in range(3)) for row in self.rows))

    def apply_line(self, l: ProjLine) -> ProjLine:
        # lines transform by the inverse transpose, which is proportional
        # to the cofactor matrix
        cof = self._cofactor()
        v = l.coords
        return ProjLine(*(sum(row[i] * v[i] for i in range(3)) for row in cof))

    def inverse(self) -> "ProjMap":
        cof = self._cofactor()
        adj = tuple(tuple(cof[c][r] for c in range(3)) for r in range(3))
        return ProjMap(tuple(tuple(v / self.det for v in row) for row in adj))

    def compose(self, other: "ProjMap") -> "ProjMap":
        a, b = self.rows, other.rows
        return ProjMap(
            tuple(
                tuple(sum(a[r][k] * b[k][c] for k in range(3)) for c in range(3))
                for r in range(3)
            )
        )

    def is_proportional(self, other: "ProjMap") -> bool:
        flat_a = [v for row in self.rows for v in row]
        flat_b = [v for row in other.rows for v in row]
        k = next(i for i, v in enumerate(flat_a) if v or flat_b[i])
        if flat_a[k] == 0 or flat_b[k] == 0:
            return False
        ratio = flat_a[k] / flat_b[k]
        return all(va == ratio * vb for va, vb in zip(flat_a, flat_b))

    def __repr__(self):
        return f"ProjMap({self.rows})"
