"""Exact classification of geometries on small Seifert fibered spaces.

The package computes Seifert invariants over the rationals, decides the
Thurston geometry of the underlying manifold and of conemanifold
structures along exceptional fibres, and applies both to Dehn surgeries
on torus knots.  All decisions are made in integer or rational
arithmetic; floats appear only in reported curvature parameters and in
plot output.
"""

from .arith import Handedness, PiRational, bezout, fiber_coeffs
from .base2d import BasePoint, RegionClass, base_limits, classify_triangle, curvature_parameter
from .cone3d import (
    ConeStructure,
    FamilyDimension,
    GeometryResult,
    NO_STRUCTURE,
    SphericityInterval,
    classify_cone,
    family_dimension,
    manifold_geometry_from_limits,
    sphericity_limits,
    sphericity_ratio,
)
from .kernel import BACKEND
from .seifert import (
    FamilyId,
    FamilyKind,
    GeometryType,
    SeifertSignature,
    euler_number,
    family_signature,
    homology_order,
    identify_family,
    lens_params,
    manifold_geometry,
    named_family,
    normalize,
    orbifold_euler_char,
)
from .surgery import (
    LinePoint,
    SurgerySpec,
    TorusKnot,
    atlas,
    brieskorn_surgery,
    classify_surgery_cone,
    line_of_surgery,
    nil_admissible,
    spherical_orbifold_angles,
    surgery_of_line,
    surgery_signature,
    x_limits,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasePoint",
    "ConeStructure",
    "FamilyDimension",
    "FamilyId",
    "FamilyKind",
    "GeometryResult",
    "GeometryType",
    "Handedness",
    "LinePoint",
    "NO_STRUCTURE",
    "PiRational",
    "RegionClass",
    "SeifertSignature",
    "SphericityInterval",
    "SurgerySpec",
    "TorusKnot",
    "atlas",
    "base_limits",
    "bezout",
    "brieskorn_surgery",
    "classify_cone",
    "classify_surgery_cone",
    "classify_triangle",
    "curvature_parameter",
    "euler_number",
    "family_dimension",
    "family_signature",
    "fiber_coeffs",
    "homology_order",
    "identify_family",
    "lens_params",
    "line_of_surgery",
    "manifold_geometry",
    "manifold_geometry_from_limits",
    "named_family",
    "nil_admissible",
    "normalize",
    "orbifold_euler_char",
    "spherical_orbifold_angles",
    "sphericity_limits",
    "sphericity_ratio",
    "surgery_of_line",
    "surgery_signature",
    "x_limits",
]
