"""Conics as symmetric matrices and the pole/polar machinery.

The distinguished instance is the unit circle x^2 + y^2 = w^2, which
carries all hyperbolic semantics.  General non-degenerate conics support
the purely algebraic operations (polar, pole, second intersection).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DegenerateConic,
    EqualPoints,
    LineMissesDisk,
    NotOnConic,
    TangentLine,
)
from .projective import (
    ProjLine,
    ProjPoint,
    Rat,
    collinear,
    concurrent,
    join,
)


class Conic:
    """A non-degenerate conic p^T C p = 0 with symmetric rational C."""

    __slots__ = ("mat",)

    def __init__(self, rows):
        mat = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if len(mat) != 3 or any(len(r) != 3 for r in mat):
            raise DegenerateConic("conic needs a 3x3 matrix")
        if any(mat[i][j] != mat[j][i] for i in range(3) for j in range(3)):
            raise DegenerateConic("conic matrix must be symmetric")
        m = mat
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det == 0:
            raise DegenerateConic("degenerate conics are not supported")
        self.mat = mat

    def __repr__(self):
        return f"Conic({self.mat})"


UNIT_CIRCLE = Conic(((1, 0, 0), (0, 1, 0), (0, 0, -1)))


def bilinear(C: Conic, p: ProjPoint, q: ProjPoint) -> Rat:
    """q^T C p on canonical representatives."""
    m, u, v = C.mat, p.coords, q.coords
    return sum(v[i] * m[i][j] * u[j] for i in range(3) for j in range(3))


def quadratic_form(C: Conic, p: ProjPoint) -> Rat:
    """p^T C p on the canonical representative.

    The sign is well defined (rescaling multiplies by a square); for the
    unit circle it is negative inside, zero on, positive outside.
    """
    return bilinear(C, p, p)


def on_conic(C: Conic, p: ProjPoint) -> bool:
    return quadratic_form(C, p) == 0


def classify(C: Conic, p: ProjPoint) -> int:
    """Sign of the quadratic form: -1 interior, 0 on, +1 exterior."""
    q = quadratic_form(C, p)
    return (q > 0) - (q < 0)


def polar(C: Conic, p: ProjPoint) -> ProjLine:
    """The polar line C.p of a point; the tangent when p is on C."""
    m, v = C.mat, p.coords
    return ProjLine(*(sum(m[i][j] * v[j] for j in range(3)) for i in range(3)))


def pole(C: Conic, l: ProjLine) -> ProjPoint:
    """The pole of a line, the inverse of the polar correspondence."""
    m, v = C.mat, l.coords
    # C^-1 is proportional to the cofactor matrix of a symmetric C;
    # the cyclic index form has the cofactor signs built in
    cof = tuple(
        tuple(
            m[(r + 1) % 3][(c + 1) % 3] * m[(r + 2) % 3][(c + 2) % 3]
            - m[(r + 1) % 3][(c + 2) % 3] * m[(r + 2) % 3][(c + 1) % 3]
            for c in range(3)
        )
        for r in range(3)
    )
    return ProjPoint(*(sum(cof[i][j] * v[j] for j in range(3)) for i in range(3)))


def conjugate(C: Conic, p: ProjPoint, q: ProjPoint) -> bool:
    """Conjugacy q^T C p = 0, i.e. q lies on the polar of p.

    When the chord through p and q has rational ideal endpoints A, B this
    is equivalent to cross_ratio(A, B, p, q) = -1.
    """
    if p == q:
        raise EqualPoints("conjugate needs distinct points")
    return bilinear(C, p, q) == 0


def dual_check(C: Conic, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> bool:
    """Alignment of points agrees with concurrency of their polars."""
    aligned = collinear(p1, p2, p3).ok
    concur = concurrent(polar(C, p1), polar(C, p2), polar(C, p3)).ok
    assert aligned == concur, "polarity must preserve incidence"
    return concur


class _Infinity:
    """Sentinel for the parameter value at the point (-1, 0)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()

Param = "Fraction | _Infinity"


def format_param(t) -> str:
    return "inf" if t is INFINITY else str(Fraction(t))


def parse_param(text: str):
    text = text.strip()
    return INFINITY if text in ("inf", "oo") else Fraction(text)


def param_sort_key(t):
    """Total order on parameters matching the cyclic order on the circle."""
    return (1, Fraction(0)) if t is INFINITY else (0, Fraction(t))


class IdealPoint:
    """A rational point of the unit circle with its chord parameter t."""

    __slots__ = ("point", "t")

    def __init__(self, p: ProjPoint):
        if quadratic_form(UNIT_CIRCLE, p) != 0:
            raise NotOnConic(f"{p} is not on the unit circle")
        self.point = p
        x, y, w = p.coords
        self.t = INFINITY if x + w == 0 else Fraction(y, x + w)

    @classmethod
    def from_param(cls, t) -> "IdealPoint":
        if t is INFINITY:
            return cls(ProjPoint(-1, 0, 1))
        t = Fraction(t)
        return cls(ProjPoint(1 - t * t, 2 * t, 1 + t * t))

    def __eq__(self, other):
        return isinstance(other, IdealPoint) and self.point == other.point

    def __hash__(self):
        return hash(("ideal", self.point.coords))

    def __repr__(self):
        return f"IdealPoint({format_param(self.t)})"


def param_point(t) -> IdealPoint:
    """Rational parametrization t -> (1-t^2, 2t, 1+t^2) of the circle."""
    return IdealPoint.from_param(t)


class Chord:
    """A hyperbolic line: an exact ProjLine meeting the open disk.

    Ideal endpoints are carried when they are rational (always the case
    for chords built from two IdealPoints; for constructed perpendiculars
    they may be irrational and are then computed numerically on demand).
    """

    __slots__ = ("line", "endpoints")

    def __init__(self, line: ProjLine, endpoints=None):
        a, b, c = line.coords
        if a * a + b * b <= c * c:
            raise LineMissesDisk(f"{line} does not meet the open disk")
        if endpoints is None:
            endpoints = _rational_endpoints(line)
        self.line = line
        self.endpoints = endpoints

    @classmethod
    def through(cls, a: IdealPoint, b: IdealPoint) -> "Chord":
        if a == b:
            raise EqualPoints("chord needs two distinct ideal points")
        return cls(join(a.point, b.point), endpoints=(a, b))

    def float_endpoints(self) -> tuple[tuple[float, float], tuple[float, float]]:
        if self.endpoints is not None:
            return (
                self.endpoints[0].point.affine_floats(),
                self.endpoints[1].point.affine_floats(),
            )
        a, b, c = (float(v) for v in self.line.coords)
        n2 = a * a + b * b
        # foot of the perpendicular from the origin, then walk the chord
        fx, fy = -a * c / n2, -b * c / n2
        half = (1.0 - c * c / n2) ** 0.5
        dx, dy = -b / n2**0.5, a / n2**0.5
        return (fx - half * dx, fy - half * dy), (fx + half * dx, fy + half * dy)

    def __eq__(self, other):
        return isinstance(other, Chord) and self.line == other.line

    def __hash__(self):
        return hash(("chord", self.line.coords))

    def __repr__(self):
        return f"Chord({self.line})"


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _rational_endpoints(line: ProjLine):
    """Ideal endpoints of a chord when they are rational, else None.

    Substituting the circle parametrization into a*x + b*y + c*w gives
    (c - a) t^2 + 2 b t + (a + c) = 0; rational roots exist iff
    a^2 + b^2 - c^2 is a perfect square.
    """
    a, b, c = line.coords
    disc = a * a + b * b - c * c
    root = _isqrt_exact(disc)
    if root is None:
        return None
    lead = c - a
    if lead == 0:
        # one endpoint at t = infinity
        ts = [INFINITY, Fraction(-(a + c), 2 * b)]
    else:
        ts = [Fraction(-b + root, lead), Fraction(-b - root, lead)]
    e1, e2 = (IdealPoint.from_param(t) for t in ts)
    return (e1, e2)


def second_intersection(C: Conic, a, l: ProjLine):
    """The second point of l on C, given one point a of l on C.

    Everything stays rational: with a on the conic, the restriction of
    the quadratic form to l has a known root at a, and the other root is
    read off the linear coefficient (Vieta).  Returns an IdealPoint for
    the unit circle, a plain ProjPoint for other conics.
    """
    pa = a.point if isinstance(a, IdealPoint) else a
    if not on_conic(C, pa):
        raise NotOnConic(f"{pa} is not on the conic")
    if not l.contains(pa):
        raise ValueError(f"{l} does not pass through {pa}")
    if l == polar(C, pa):
        raise TangentLine(f"{l} is tangent at {pa}")
    # a second point spanning l with pa
    p0 = None
    for basis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        u = l.coords
        cand = (
            u[1] * basis[2] - u[2] * basis[1],
            u[2] * basis[0] - u[0] * basis[2],
            u[0] * basis[1] - u[1] * basis[0],
        )
        if any(cand):
            q = ProjPoint(*cand)
            if q != pa:
                p0 = q
                break
    assert p0 is not None
    beta = quadratic_form(C, p0)
    if beta == 0:
        result = p0
    else:
        alpha = bilinear(C, pa, p0)
        result = ProjPoint(
            *(beta * pa.coords[i] - 2 * alpha * p0.coords[i] for i in range(3))
        )
    if C is UNIT_CIRCLE or C.mat == UNIT_CIRCLE.mat:
        return IdealPoint(result)
    return result
