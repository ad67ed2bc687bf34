"""Seifert conemanifold structures: geometry from cone angles.

A cone structure assigns each fibre (a_i, b_i) a cone angle beta_i in
[0, 2*pi*a_i].  The induced base cone point has angles

    alpha_i = beta_i / (2 * a_i),

and the geometry follows from the region of the base point together
with the Euler number of the fibration: the hyperbolic region gives
SL2R (H2xR when e = 0), the Euclidean face gives Nil (Euclidean),
the spherical tetrahedron and its edges give Spherical (S2xR), and
everything else carries no geometric Seifert conemanifold structure.

When one fibre of multiplicity a3 is singular and the other two, of
multiplicities 1 < a1 <= a2, stay at 2*pi, the structure is spherical
exactly between the sphericity limits

    beta_L = 2*pi*a3*(a1*a2 - a2 - a1)/(a1*a2)
    beta_U = 2*pi*a3*(a1*a2 - a2 + a1)/(a1*a2)

with Nil (Euclidean when e = 0) at beta_L and SL2R (H2xR) below it.
The ratio beta_U / beta_L does not depend on a3 and the width is
4*pi*a3/a2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import PiRational, TWO_PI
from .base2d import STRUCTURE_CLASSES, BasePoint, RegionClass, classify_triangle
from .seifert import GeometryType, SeifertSignature, euler_number, normalize_with_order


@dataclass(frozen=True)
class GeometryResult:
    """Either one of the six geometries or no structure at all."""

    geometry: GeometryType | None

    @property
    def has_structure(self) -> bool:
        return self.geometry is not None

    def __str__(self):
        return "NoStructure" if self.geometry is None else self.geometry.value


NO_STRUCTURE = GeometryResult(None)


@dataclass(frozen=True)
class ConeStructure:
    """A normalized signature with one cone angle per fibre.

    The constructor accepts a raw signature; normalization carries the
    angles through the fibre permutation, so angle k always belongs to
    fibre k of the stored signature.
    """

    sig: SeifertSignature
    angles: tuple[PiRational, PiRational, PiRational]

    def __init__(self, sig: SeifertSignature, angles):
        angles = tuple(
            beta if isinstance(beta, PiRational) else PiRational(beta)
            for beta in angles
        )
        if len(angles) != len(sig.fibers):
            raise ValueError(
                "expected %d cone angles, got %d" % (len(sig.fibers), len(angles))
            )
        norm, order = normalize_with_order(sig)
        angles = tuple(angles[i] for i in order)
        for (a, _), beta in zip(norm.fibers, angles):
            if beta.coeff > 2 * a:
                raise ValueError(
                    "cone angle %s exceeds 2*pi*%d on a fibre of multiplicity %d"
                    % (beta, a, a)
                )
        object.__setattr__(self, "sig", norm)
        object.__setattr__(self, "angles", angles)

    def base_point(self) -> BasePoint:
        return BasePoint(
            *(beta / (2 * a) for (a, _), beta in zip(self.sig.fibers, self.angles))
        )

    def singular_set(self) -> tuple[int, ...]:
        """1-based positions of the fibres whose angle is not 2*pi."""
        return tuple(
            k + 1 for k, beta in enumerate(self.angles) if beta != TWO_PI
        )


def classify_cone(cs: ConeStructure) -> GeometryResult:
    """Geometry of the cone structure, or NO_STRUCTURE."""
    region = classify_triangle(cs.base_point())
    twisted = euler_number(cs.sig) != 0
    if region is RegionClass.HYPERBOLIC:
        return GeometryResult(GeometryType.SL2R if twisted else GeometryType.H2XR)
    if region is RegionClass.EUCLIDEAN_FACE:
        return GeometryResult(GeometryType.NIL if twisted else GeometryType.EUCLIDEAN)
    if region in (RegionClass.SPHERICAL_INTERIOR, RegionClass.SPHERICAL_EDGE):
        return GeometryResult(GeometryType.SPHERICAL if twisted else GeometryType.S2XR)
    return NO_STRUCTURE


@dataclass(frozen=True)
class SphericityInterval:
    beta_lower: PiRational
    beta_upper: PiRational

    def amplitude(self) -> PiRational:
        return self.beta_upper - self.beta_lower

    def ratio(self) -> Fraction:
        if self.beta_lower.coeff == 0:
            raise ValueError("sphericity ratio undefined when beta_L = 0")
        return self.beta_upper / self.beta_lower


def sphericity_limits(a1: int, a2: int, a3: int) -> SphericityInterval:
    """Sphericity interval of the angle on the singular fibre.

    a3 is the multiplicity of the singular fibre (a3 >= 1); a1 and a2
    are the multiplicities of the two fibres kept at angle 2*pi, sorted
    internally, both > 1.
    """
    a1, a2 = sorted((a1, a2))
    if a1 <= 1:
        raise ValueError(
            "sphericity limits need both non-singular multiplicities > 1"
        )
    if a3 < 1:
        raise ValueError("singular multiplicity must be >= 1, got %d" % a3)
    lower = PiRational(Fraction(2 * a3 * (a1 * a2 - a2 - a1), a1 * a2))
    upper = PiRational(Fraction(2 * a3 * (a1 * a2 - a2 + a1), a1 * a2))
    return SphericityInterval(lower, upper)


def sphericity_ratio(a1: int, a2: int) -> Fraction:
    """beta_U / beta_L, independent of the singular multiplicity."""
    a1, a2 = sorted((a1, a2))
    if a1 <= 1:
        raise ValueError("sphericity ratio needs both multiplicities > 1")
    den = a1 * a2 - a2 - a1
    if den <= 0:
        raise ValueError(
            "sphericity ratio undefined for (%d, %d): beta_L = 0" % (a1, a2)
        )
    return Fraction(a1 * a2 - a2 + a1, den)


def manifold_geometry_from_limits(
    a1: int, a2: int, a3: int, euler_zero: bool = False
) -> GeometryType:
    """Geometry of the manifold read off the position of 2*pi.

    2*pi above beta_U cannot happen; 2*pi below beta_L gives SL2R
    (H2xR when the Euler number vanishes), equality gives Nil
    (Euclidean), and beta_L < 2*pi < beta_U gives Spherical (S2xR).
    The answer agrees with the sign table on the signature.
    """
    interval = sphericity_limits(a1, a2, a3)
    two_pi = TWO_PI
    if two_pi > interval.beta_upper:
        raise ValueError("2*pi exceeds beta_U: no such fibration")
    if two_pi < interval.beta_lower:
        return GeometryType.H2XR if euler_zero else GeometryType.SL2R
    if two_pi == interval.beta_lower:
        return GeometryType.EUCLIDEAN if euler_zero else GeometryType.NIL
    return GeometryType.S2XR if euler_zero else GeometryType.SPHERICAL


@dataclass(frozen=True)
class FamilyDimension:
    """Dimension report for the cone structures with a fixed singular set.

    kind is "continuous" (with dim parameters), "orbifold_only" (an
    isolated structure) or "none".
    """

    kind: str
    dim: int | None = None

    def __str__(self):
        if self.kind == "continuous":
            return "Dim(%d)" % self.dim
        return {"orbifold_only": "OrbifoldOnly", "none": "None"}[self.kind]


def Dim(k: int) -> FamilyDimension:
    return FamilyDimension("continuous", k)


ORBIFOLD_ONLY = FamilyDimension("orbifold_only")
NO_FAMILY = FamilyDimension("none")


def family_dimension(sig: SeifertSignature, singular) -> FamilyDimension:
    """Dimension of the family of structures with exactly this singular set.

    singular is a set of 1-based fibre positions that are allowed cone
    angles other than 2*pi; the remaining fibres are pinned at
    alpha_j = pi/a_j.  The constraint subspace of the cube is an
    axis-parallel k-plane; its position decides the answer:

      * all pinned angles interior (a_j > 1): a k-dimensional family
        (k = 0 means the manifold structure itself, if its base point
        carries a structure);
      * one pinned angle at pi, two free: the face meets the spherical
        edge in a one-parameter family;
      * one pinned at pi, one interior at pi/a_j, one free: the only
        structure is the isolated edge point alpha_free = pi/a_j,
        an orbifold-like structure unless it degenerates to the
        manifold point (a_free = a_j);
      * two pinned at pi, one free: a cube edge, no structure.
    """
    singular = frozenset(singular)
    if not singular <= {1, 2, 3}:
        raise ValueError("singular set must be a subset of {1, 2, 3}")
    sig_n, order = normalize_with_order(sig)
    if sig_n != sig:
        raise ValueError("family_dimension expects a normalized signature")

    free = sorted(singular)
    pinned_pi = [k for k in (1, 2, 3) if k not in singular and sig.fibers[k - 1][0] == 1]
    fixed_interior = [
        k for k in (1, 2, 3) if k not in singular and sig.fibers[k - 1][0] > 1
    ]
    k = len(free)

    if k == 0:
        point = BasePoint(
            *(PiRational(Fraction(1, a)) for a, _ in sig.fibers)
        )
        if classify_triangle(point) in STRUCTURE_CLASSES:
            return Dim(0)
        return NO_FAMILY
    if k == 3:
        return Dim(3)
    if not pinned_pi:
        return Dim(k)
    if k == 2:
        # One coordinate pinned at pi: the face meets the structure set
        # in the diagonal where the two free angles agree.
        return Dim(1)
    # k == 1 with at least one coordinate pinned at pi.
    if len(pinned_pi) == 2:
        return NO_FAMILY
    a_free = sig.fibers[free[0] - 1][0]
    a_fixed = sig.fibers[fixed_interior[0] - 1][0]
    if a_free == a_fixed:
        # The isolated point is the all-2*pi manifold structure, so no
        # structure has exactly this singular set.
        return NO_FAMILY
    return ORBIFOLD_ONLY
