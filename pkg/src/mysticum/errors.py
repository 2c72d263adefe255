"""Exception hierarchy for the geometry kernel.

Every degenerate or invalid configuration raises a dedicated subclass of
GeometryError so callers (and the campaign runner) can distinguish
"resample this input" from genuine bugs.
"""


class GeometryError(Exception):
    """Base class for all kernel errors."""


class EqualPoints(GeometryError):
    """Two points that must be distinct coincide up to scale."""


class EqualLines(GeometryError):
    """Two lines that must be distinct coincide up to scale."""


class NotCollinear(GeometryError):
    """Cross-ratio arguments do not lie on a common line."""


class DegenerateConfiguration(GeometryError):
    """A required signed ratio or meet is undefined."""


class SingularMap(GeometryError):
    """Projective map with zero determinant."""


class DegenerateConic(GeometryError):
    """Conic matrix is not symmetric or has zero determinant."""


class NotOnConic(GeometryError):
    """Point claimed to be on a conic is not."""


class NotInterior(GeometryError):
    """Point claimed to be inside the disk is not."""


class TangentLine(GeometryError):
    """Line is tangent to the conic; no second intersection exists."""


class LineMissesDisk(GeometryError):
    """Line does not meet the open disk, so it carries no chord."""


class MeetInsideDisk(GeometryError):
    """Chords cross in the open disk; no common perpendicular."""


class MeetOnCircle(GeometryError):
    """Chords are asymptotic (meet on the boundary circle)."""


class DegenerateHexagon(GeometryError):
    """Repeated vertices or coincident opposite sides."""


class ConcurrentDiagonals(GeometryError):
    """The three main diagonals pass through one point."""


class DegenerateTangency(GeometryError):
    """Repeated tangency points in a circumscribed hexagon."""


class TangentEncounter(GeometryError):
    """Chain propagation hit a tangent line."""


class RepeatedVertex(GeometryError):
    """Chain construction revisited a vertex."""


class DegenerateDiagonal(GeometryError):
    """A vertex used for sign normalization lies on the diagonal."""


class OnBoundary(GeometryError):
    """Sign evaluation is exactly zero; region membership undefined."""


class NotConcurrent(GeometryError):
    """Expected concurrency of perpendiculars does not hold."""


class InvalidSpec(GeometryError):
    """Campaign specification is ill-formed."""
