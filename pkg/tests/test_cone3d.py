"""Conemanifold classification, sphericity limits, family dimensions."""

import math
import random
from fractions import Fraction

import pytest

from seifertgeo.arith import PI, PiRational, TWO_PI
from seifertgeo.base2d import RegionClass, classify_triangle
from seifertgeo.cone3d import (
    ConeStructure,
    Dim,
    NO_FAMILY,
    ORBIFOLD_ONLY,
    NO_STRUCTURE,
    classify_cone,
    family_dimension,
    manifold_geometry_from_limits,
    sphericity_limits,
    sphericity_ratio,
)
from seifertgeo.seifert import (
    GeometryType,
    SeifertSignature,
    euler_number,
    manifold_geometry,
    normalize,
)

S = SeifertSignature


def angles(*coeffs):
    return tuple(PiRational(Fraction(c)) for c in coeffs)


class TestConeStructure:
    def test_base_point(self):
        cs = ConeStructure(S(-1, ((2, 1), (3, 1), (5, 1))), (TWO_PI, TWO_PI, TWO_PI))
        assert cs.base_point().coeffs() == (
            Fraction(1, 5),
            Fraction(1, 3),
            Fraction(1, 2),
        )

    def test_angle_follows_fibre_through_normalization(self):
        # the pi/5 angle stays attached to the 5-fibre wherever it sorts
        cs = ConeStructure(S(-1, ((2, 1), (3, 1), (5, 1))), angles(2, 2, "1/5"))
        assert cs.sig.fibers == ((5, 1), (3, 1), (2, 1))
        assert cs.angles[0] == PiRational(1, 5)

    def test_angle_bound(self):
        with pytest.raises(ValueError):
            ConeStructure(S(-1, ((2, 1), (3, 1), (5, 1))), angles(2, 2, 11))

    def test_singular_set(self):
        cs = ConeStructure(S(-1, ((2, 1), (3, 1), (5, 1))), angles(2, 2, "1/5"))
        assert cs.singular_set() == (1,)


class TestClassifyCone:
    def test_poincare_manifold(self):
        cs = ConeStructure(S(-1, ((2, 1), (3, 1), (5, 1))), (TWO_PI, TWO_PI, TWO_PI))
        result = classify_cone(cs)
        assert result.has_structure
        assert result.geometry is GeometryType.SPHERICAL

    def test_hopf_one_singular_fibre(self):
        hopf = S(-1, ((1, 0), (1, 0), (1, 0)))
        cs = ConeStructure(hopf, angles(2, 2, "1/2"))
        assert classify_cone(cs) == NO_STRUCTURE
        assert str(classify_cone(cs)) == "NoStructure"

    def test_euclidean_tessellation(self):
        cs = ConeStructure(S(-1, ((2, 1), (3, 1), (6, 1))), (TWO_PI, TWO_PI, TWO_PI))
        assert classify_cone(cs).geometry is GeometryType.EUCLIDEAN

    def test_e_zero_spherical_pair(self):
        # RP3 # RP3 carries S2xR; its base point is a spherical edge point
        cs = ConeStructure(S(-1, ((2, 1), (2, 1))), (TWO_PI, TWO_PI, TWO_PI))
        assert classify_cone(cs).geometry is GeometryType.S2XR

    def test_permutation_equivariance(self):
        rng = random.Random(23)
        for _ in range(200):
            pairs, ang = [], []
            for _ in range(3):
                a = rng.randint(1, 6)
                b = rng.choice([k for k in range(-5, 6) if math.gcd(a, abs(k)) == 1])
                pairs.append((a, b))
                ang.append(PiRational(rng.randint(0, 2 * a), a))
            b0 = rng.randint(-2, 2)
            base = classify_cone(ConeStructure(S(b0, tuple(pairs)), tuple(ang)))
            for perm in ((1, 2, 0), (2, 0, 1), (0, 2, 1)):
                cs = ConeStructure(
                    S(b0, tuple(pairs[i] for i in perm)),
                    tuple(ang[i] for i in perm),
                )
                assert classify_cone(cs) == base


class TestSphericityLimits:
    def test_t_family_3_fibre(self):
        iv = sphericity_limits(2, 3, 3)
        assert (iv.beta_lower, iv.beta_upper) == (PI, PiRational(5))

    def test_prism_n_fibre(self):
        for n in range(2, 11):
            iv = sphericity_limits(2, 2, n)
            assert iv.beta_lower == PiRational(0)
            assert iv.beta_upper == PiRational(2 * n)

    def test_i_family_5_fibre(self):
        iv = sphericity_limits(2, 3, 5)
        assert (iv.beta_lower, iv.beta_upper) == (PiRational(5, 3), PiRational(25, 3))

    def test_unsorted_pair_accepted(self):
        assert sphericity_limits(3, 2, 5) == sphericity_limits(2, 3, 5)

    def test_rejects_degenerate_pair(self):
        with pytest.raises(ValueError):
            sphericity_limits(1, 3, 5)

    def test_amplitude_identity(self):
        for a1 in range(2, 8):
            for a2 in range(a1, 10):
                for a3 in range(1, 8):
                    iv = sphericity_limits(a1, a2, a3)
                    assert iv.amplitude() == PiRational(4 * a3, a2)

    def test_ratio_examples(self):
        assert sphericity_ratio(2, 3) == Fraction(5)
        assert sphericity_ratio(3, 4) == Fraction(11, 5)
        assert sphericity_ratio(2, 5) == Fraction(7, 3)

    def test_ratio_prism_undefined(self):
        with pytest.raises(ValueError):
            sphericity_ratio(2, 2)

    def test_ratio_independent_of_singular_multiplicity(self):
        for a1, a2 in ((2, 3), (3, 4), (2, 5), (3, 5), (4, 5)):
            want = sphericity_ratio(a1, a2)
            for a3 in range(1, 51):
                assert sphericity_limits(a1, a2, a3).ratio() == want


def sweep_class(a1, a2, a3, beta):
    """Region class of the one-singular-fibre family at angle beta."""
    from seifertgeo.base2d import BasePoint

    point = BasePoint(
        PiRational(Fraction(1, a1)),
        PiRational(Fraction(1, a2)),
        PiRational(beta.coeff / (2 * a3)),
    )
    return classify_triangle(point)


class TestSweepOracle:
    # the classifier transitions exactly at the formula endpoints
    def assert_transitions(self, a1, a2, a3):
        iv = sphericity_limits(a1, a2, a3)
        lo, hi = iv.beta_lower.coeff, iv.beta_upper.coeff
        step = Fraction(1, 7 * a1 * a2)
        beta = step
        top = Fraction(2 * a3)
        while beta <= top:
            cls = sweep_class(a1, a2, a3, PiRational(beta))
            if beta < lo:
                assert cls is RegionClass.HYPERBOLIC, (a1, a2, a3, beta)
            elif beta == lo:
                assert cls is RegionClass.EUCLIDEAN_FACE
            elif beta < hi:
                assert cls is RegionClass.SPHERICAL_INTERIOR
            elif beta == hi:
                assert cls is (
                    RegionClass.SPHERICAL_EDGE
                    if a1 == a2
                    else RegionClass.NO_STRUCTURE_FACE
                )
            elif beta < top:
                assert cls is RegionClass.NO_STRUCTURE_FACE
            else:
                # alpha3 = pi with unequal companions: cube boundary
                assert cls is RegionClass.DEGENERATE_BOUNDARY
            beta += step

    def test_all_small_families(self):
        for a1, a2 in ((2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 6), (4, 4), (3, 6)):
            for a3 in (1, 2, 3, 5):
                self.assert_transitions(a1, a2, a3)


class TestManifoldFromLimits:
    def test_spherical(self):
        assert manifold_geometry_from_limits(2, 3, 5) is GeometryType.SPHERICAL

    def test_boundary_is_flat(self):
        assert manifold_geometry_from_limits(3, 3, 3) is GeometryType.NIL
        assert manifold_geometry_from_limits(3, 3, 3, euler_zero=True) is GeometryType.EUCLIDEAN

    def test_sl2r(self):
        assert manifold_geometry_from_limits(2, 3, 7) is GeometryType.SL2R

    def test_euler_zero_variants(self):
        assert manifold_geometry_from_limits(2, 3, 5, euler_zero=True) is GeometryType.S2XR
        assert manifold_geometry_from_limits(2, 3, 7, euler_zero=True) is GeometryType.H2XR

    def test_agrees_with_manifold_geometry(self):
        rng = random.Random(31)
        for _ in range(300):
            a = sorted((rng.randint(2, 9), rng.randint(2, 9)))
            a3 = rng.randint(2, 9)
            pairs = []
            for ai in (a3, a[0], a[1]):
                bi = rng.choice([k for k in range(1, ai) if math.gcd(ai, k) == 1])
                pairs.append((ai, bi))
            sig = S(rng.randint(-3, 3), tuple(pairs))
            want = manifold_geometry(sig)
            got = manifold_geometry_from_limits(
                a[0], a[1], a3, euler_zero=euler_number(sig) == 0
            )
            assert got is want, str(sig)


class TestFamilyDimension:
    def test_three_singular(self):
        sig = normalize(S(-1, ((2, 1), (3, 1), (5, 1))))
        assert family_dimension(sig, (1, 2, 3)) == Dim(3)

    def test_general_fibre_of_lens(self):
        sig = normalize(S(0, ((3, 1), (4, 3))))
        assert family_dimension(sig, (3,)) == Dim(1)

    def test_hopf_single_fibre(self):
        hopf = normalize(S(-1, ((1, 0),)))
        assert family_dimension(hopf, (3,)) == NO_FAMILY

    def test_exceptional_fibre_orbifold_only(self):
        sig = normalize(S(0, ((3, 1), (4, 3))))
        assert family_dimension(sig, (1,)) == ORBIFOLD_ONLY

    def test_equal_pair_exceptional_fibre_none(self):
        sig = normalize(S(-1, ((3, 1), (3, 2))))
        assert family_dimension(sig, (1,)) == NO_FAMILY

    def test_both_exceptional_fibres_singular(self):
        # general fibre pinned on the alpha3 = pi face: one-parameter
        # family beta_i = 2 alpha a_i
        sig = normalize(S(0, ((3, 1), (4, 3))))
        assert family_dimension(sig, (1, 2)) == Dim(1)

    def test_exceptional_plus_general_singular(self):
        # remaining exceptional fibre pinned in the cube interior
        sig = normalize(S(0, ((3, 1), (4, 3))))
        assert family_dimension(sig, (1, 3)) == Dim(2)

    def test_manifold_point(self):
        poincare = normalize(S(-1, ((2, 1), (3, 1), (5, 1))))
        assert family_dimension(poincare, ()) == Dim(0)
        teardrop = normalize(S(-1, ((3, 1),)))
        assert family_dimension(teardrop, ()) == NO_FAMILY

    def test_requires_normalized(self):
        with pytest.raises(ValueError):
            family_dimension(S(0, ((2, 1), (3, 1), (5, -4))), (1,))


class TestGeometryTableConsistency:
    def test_small_scan(self):
        # spot an agreeing sample here; the full sweep lives in acceptance
        rng = random.Random(41)
        for _ in range(400):
            pairs = []
            for _ in range(3):
                a = rng.randint(1, 8)
                b = rng.choice([k for k in range(0, a) if math.gcd(a, max(k, 1)) == 1 or (a == 1 and k == 0)])
                if a > 1 and math.gcd(a, b) != 1:
                    continue
                pairs.append((a, b if a > 1 else 0))
            if len(pairs) != 3:
                continue
            sig = normalize(S(rng.randint(-3, 3), tuple(pairs)))
            cs = ConeStructure(sig, (TWO_PI, TWO_PI, TWO_PI))
            cls = classify_triangle(cs.base_point())
            result = classify_cone(cs)
            if cls is RegionClass.DEGENERATE_BOUNDARY:
                assert result == NO_STRUCTURE
                mult = sig.multiplicities()
                assert mult[2] == 1 and mult[0] != mult[1]
            else:
                assert result.geometry is manifold_geometry(sig)
