"""mysticum: an exact-arithmetic projective and hyperbolic geometry kernel
that constructs and certifies incidence theorems for hexagons (and
(4n+2)-gons) inscribed in the unit circle."""

from .conic import (
    Chord,
    Conic,
    IdealPoint,
    INFINITY,
    UNIT_CIRCLE,
    conjugate,
    dual_check,
    on_conic,
    param_point,
    pole,
    polar,
    second_intersection,
)
from .errors import GeometryError
from .klein import (
    HPoint,
    Reflection,
    bisector_of_ideal_quadrilateral,
    common_perpendicular,
    hilbert_distance,
    is_orthogonal,
    point_to_chord_distance,
    reflection_across_chord,
)
from .moebius import (
    MoebiusConfig,
    SignedLineForm,
    bisector_equidistance_check,
    build_chain_polygon,
    normalized_line_forms,
    region_membership,
    verify_moebius,
    verify_region_lemma,
)
from .projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    Rat,
    collinear,
    concurrent,
    cross_ratio,
    join,
    meet,
    point,
)
from .theorems import (
    IdealPolygon,
    VerificationReport,
    enumerate_pascal_lines,
    verify_bisector_concurrency,
    verify_brianchon,
    verify_pascal,
    verify_prop2,
    verify_quadrilateral_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "Chord",
    "Conic",
    "GeometryError",
    "HPoint",
    "IdealPoint",
    "IdealPolygon",
    "INFINITY",
    "MoebiusConfig",
    "ProjLine",
    "ProjMap",
    "ProjPoint",
    "Rat",
    "Reflection",
    "SignedLineForm",
    "UNIT_CIRCLE",
    "VerificationReport",
    "bisector_equidistance_check",
    "bisector_of_ideal_quadrilateral",
    "build_chain_polygon",
    "collinear",
    "common_perpendicular",
    "concurrent",
    "conjugate",
    "cross_ratio",
    "dual_check",
    "enumerate_pascal_lines",
    "hilbert_distance",
    "is_orthogonal",
    "join",
    "meet",
    "normalized_line_forms",
    "on_conic",
    "param_point",
    "point",
    "point_to_chord_distance",
    "polar",
    "pole",
    "reflection_across_chord",
    "region_membership",
    "second_intersection",
    "verify_bisector_concurrency",
    "verify_brianchon",
    "verify_moebius",
    "verify_pascal",
    "verify_prop2",
    "verify_quadrilateral_lemma",
    "verify_region_lemma",
]
