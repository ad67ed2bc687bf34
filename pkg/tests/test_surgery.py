"""Dehn surgery on torus knots and the line model."""

import math
import random
from fractions import Fraction

import pytest

from seifertgeo.arith import Handedness, PI, PiRational, TWO_PI
from seifertgeo.seifert import (
    GeometryType,
    SeifertSignature,
    euler_number,
    homology_order,
)
from seifertgeo.surgery import (
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

L, R = Handedness.LEFT, Handedness.RIGHT
S = SeifertSignature


def coprime_knots(r_max):
    for r in range(3, r_max + 1):
        for s in range(2, r):
            if math.gcd(r, s) == 1:
                yield r, s


class TestTorusKnot:
    def test_validation(self):
        with pytest.raises(ValueError):
            TorusKnot(4, 2, L)
        with pytest.raises(ValueError):
            TorusKnot(2, 3, L)
        with pytest.raises(ValueError):
            TorusKnot(3, 1, L)

    def test_str(self):
        assert str(TorusKnot(3, 2, L)) == "K(3,2) left"


class TestSurgerySignature:
    def test_poincare(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 1, -1)
        assert surgery_signature(spec) == S(-1, ((2, 1), (3, 1), (5, 1)))

    def test_left_zero_slope(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 0, 1)
        assert surgery_signature(spec) == S(-1, ((2, 1), (3, 1), (6, 1)))

    def test_right_zero_slope(self):
        spec = SurgerySpec(TorusKnot(3, 2, R), 0, 1)
        assert surgery_signature(spec) == S(-1, ((2, 1), (3, 2), (6, -1)))

    def test_infinity_gives_sphere(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 1, 0)
        sig = surgery_signature(spec)
        assert homology_order(sig) == 1
        assert sig.fibers[2] == (1, 0)

    def test_exceptional_slope_rejected(self):
        with pytest.raises(ValueError):
            surgery_signature(SurgerySpec(TorusKnot(3, 2, L), 6, -1))
        with pytest.raises(ValueError):
            surgery_signature(SurgerySpec(TorusKnot(3, 2, R), 6, 1))

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SurgerySpec(TorusKnot(3, 2, L), -1, 2)
        with pytest.raises(ValueError):
            SurgerySpec(TorusKnot(3, 2, L), 2, 4)
        with pytest.raises(ValueError):
            SurgerySpec(TorusKnot(3, 2, L), 0, 0)

    def test_homology_is_p(self):
        rng = random.Random(61)
        for r, s in coprime_knots(12):
            for hand in (L, R):
                knot = TorusKnot(r, s, hand)
                for _ in range(40):
                    q = rng.choice([k for k in range(-9, 10) if k != 0])
                    p = rng.choice(
                        [k for k in range(0, 40) if math.gcd(k, abs(q)) == 1]
                    )
                    spec = SurgerySpec(knot, p, q)
                    try:
                        sig = surgery_signature(spec)
                    except ValueError:
                        continue
                    if p == 0:
                        assert homology_order(sig) is None
                    else:
                        assert homology_order(sig) == p

    def test_euler_formula(self):
        rng = random.Random(67)
        for r, s in coprime_knots(12):
            rs = r * s
            for hand in (L, R):
                knot = TorusKnot(r, s, hand)
                for _ in range(25):
                    q = rng.choice([k for k in range(-9, 10) if k != 0])
                    p = rng.choice(
                        [k for k in range(0, 40) if math.gcd(k, abs(q)) == 1]
                    )
                    spec = SurgerySpec(knot, p, q)
                    try:
                        sig = surgery_signature(spec)
                    except ValueError:
                        continue
                    pt = line_of_surgery(spec)
                    m, n = pt.m, pt.n
                    if hand is L:
                        want = Fraction(m - n * rs, rs * m)
                    else:
                        want = Fraction(-(m + n * rs), rs * m)
                    assert euler_number(sig) == want


class TestLineModel:
    def test_poincare_point(self):
        assert line_of_surgery(SurgerySpec(TorusKnot(3, 2, L), 1, -1)) == LinePoint(5, 1)

    def test_euler_zero_point_back_to_slope(self):
        spec = surgery_of_line(TorusKnot(3, 2, L), LinePoint(6, 1))
        assert (spec.p, spec.q) == (0, 1)

    def test_43_point(self):
        spec = surgery_of_line(TorusKnot(4, 3, L), LinePoint(1, 1))
        assert (spec.p, spec.q) == (11, -1)

    def test_infinity(self):
        assert line_of_surgery(SurgerySpec(TorusKnot(3, 2, L), 1, 0)) == LinePoint(1, 0)
        spec = surgery_of_line(TorusKnot(3, 2, L), LinePoint(1, 0))
        assert (spec.p, spec.q) == (1, 0)

    def test_round_trip(self):
        # p >= 1: both signs of q at p = 0 name the same slope and the
        # chart returns the canonical one, covered above
        rng = random.Random(71)
        for r, s in coprime_knots(10):
            for hand in (L, R):
                knot = TorusKnot(r, s, hand)
                for _ in range(30):
                    q = rng.choice([k for k in range(-9, 10) if k != 0])
                    p = rng.choice(
                        [k for k in range(1, 40) if math.gcd(k, abs(q)) == 1]
                    )
                    spec = SurgerySpec(knot, p, q)
                    try:
                        pt = line_of_surgery(spec)
                    except ValueError:
                        continue
                    back = surgery_of_line(knot, pt)
                    assert (back.p, back.q) == (p, q)

    def test_primitive_validation(self):
        with pytest.raises(ValueError):
            LinePoint(4, 2)
        with pytest.raises(ValueError):
            LinePoint(-1, 1)


class TestXLimits:
    def test_trefoil(self):
        assert x_limits(TorusKnot(3, 2, L)) == (Fraction(6, 5), Fraction(6))

    def test_43(self):
        assert x_limits(TorusKnot(4, 3, L)) == (Fraction(12, 11), Fraction(12, 5))

    def test_54(self):
        assert x_limits(TorusKnot(5, 4, L)) == (Fraction(20, 19), Fraction(20, 11))

    def test_hand_independent(self):
        assert x_limits(TorusKnot(5, 2, L)) == x_limits(TorusKnot(5, 2, R))

    def test_low_limit_below_two_iff(self):
        for r, s in coprime_knots(100):
            _, x_low = x_limits(TorusKnot(r, s, L))
            flagged = (r - 2) * (s - 2) > 4 or (r, s) == (5, 4)
            assert (x_low < 2) == flagged, (r, s)


class TestSphericalOrbifolds:
    def test_trefoil(self):
        got = spherical_orbifold_angles(TorusKnot(3, 2, L))
        assert [x for x, _ in got] == [2, 3, 4, 5]
        assert [a.text() for _, a in got] == ["1pi", "2/3pi", "1/2pi", "2/5pi"]

    def test_52(self):
        got = spherical_orbifold_angles(TorusKnot(5, 2, L))
        assert [(x, a.text()) for x, a in got] == [(2, "1pi"), (3, "2/3pi")]

    def test_73_empty(self):
        assert spherical_orbifold_angles(TorusKnot(7, 3, L)) == []

    def test_admissible_sets_to_100(self):
        admissible = set()
        for r, s in coprime_knots(100):
            knot = TorusKnot(r, s, L)
            if spherical_orbifold_angles(knot):
                admissible.add((r, s))
            if s == 2 and r >= 6:
                assert [x for x, _ in spherical_orbifold_angles(knot)] == [2]
        want = {(r, 2) for r in range(3, 101, 2)} | {(4, 3), (5, 3)}
        assert admissible == want

    def test_nil_admissible(self):
        nil = {
            (r, s)
            for r, s in coprime_knots(100)
            if nil_admissible(TorusKnot(r, s, L))
        }
        assert nil == {(3, 2)}


class TestClassify:
    def test_nil_orbifold_on_trefoil(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 4, -1)
        result = classify_surgery_cone(spec, PiRational(2, 3))
        assert result.geometry is GeometryType.NIL

    def test_spherical_on_43(self):
        spec = SurgerySpec(TorusKnot(4, 3, L), 11, -1)
        assert classify_surgery_cone(spec, PI).geometry is GeometryType.SPHERICAL

    def test_poincare_manifold(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 1, -1)
        assert classify_surgery_cone(spec, TWO_PI).geometry is GeometryType.SPHERICAL

    def test_depends_only_on_x_and_euler_sign(self):
        # same abscissa and e-sign, same class, across slopes and knots
        rng = random.Random(83)
        for _ in range(250):
            r, s = rng.choice(list(coprime_knots(8)))
            hand = rng.choice((L, R))
            knot = TorusKnot(r, s, hand)
            m = rng.randint(1, 30)
            candidates = [n for n in range(-4, 5) if n and math.gcd(m, abs(n)) == 1]
            if len(candidates) < 2:
                continue
            n1, n2 = rng.sample(candidates, 2)
            k = rng.randint(1, 4)
            beta = PiRational(2, k)
            results, signs = [], []
            for n in (n1, n2):
                spec = surgery_of_line(knot, LinePoint(m, n))
                results.append(classify_surgery_cone(spec, beta))
                signs.append(_sign(euler_number(surgery_signature(spec))))
            if signs[0] == signs[1]:
                assert results[0] == results[1]

    def test_angle_bound(self):
        spec = SurgerySpec(TorusKnot(3, 2, L), 1, -1)
        with pytest.raises(ValueError):
            classify_surgery_cone(spec, PiRational(2 * 5 + 1))


def _sign(f):
    return (f > 0) - (f < 0)


class TestBrieskorn:
    def test_poincare(self):
        knot, q = brieskorn_surgery(2, 3, 5)
        assert (knot.r, knot.s, knot.hand) == (3, 2, R)
        assert q == 1

    def test_237(self):
        knot, q = brieskorn_surgery(2, 3, 7)
        assert (knot.r, knot.s, knot.hand) == (3, 2, R)
        assert q == -1

    def test_345_absent(self):
        assert brieskorn_surgery(3, 4, 5) is None

    def test_validation(self):
        with pytest.raises(ValueError):
            brieskorn_surgery(2, 4, 5)
        with pytest.raises(ValueError):
            brieskorn_surgery(3, 2, 5)

    def test_witness_is_consistent(self):
        # the 1/q surgery on the witness knot has |H1| = 1 and the
        # prescribed multiplicities
        for a1, a2, a3 in ((2, 3, 5), (2, 3, 7), (2, 3, 11), (2, 3, 13), (3, 4, 11), (3, 4, 13), (2, 5, 9), (2, 5, 11)):
            found = brieskorn_surgery(a1, a2, a3)
            if found is None:
                assert not any(
                    abs(q * a1 * a2 - 1) == a3 for q in range(-a3 - 1, a3 + 2)
                )
                continue
            knot, q = found
            spec = SurgerySpec(knot, 1, q)
            sig = surgery_signature(spec)
            assert homology_order(sig) == 1
            assert sorted(a for a, _ in sig.fibers) == [a1, a2, a3]


class TestAtlas:
    def test_trefoil_records(self):
        records = atlas(TorusKnot(3, 2, L), 6, (1, 1), 1)
        by_point = {(rec["m"], rec["n"], rec["x"]): rec for rec in records}
        euclid = by_point[(6, 1, 6)]
        assert (euclid["p"], euclid["q"]) == (0, 1)
        assert euclid["beta"] == "2pi"
        assert euclid["geometry"] == "Euclidean"
        poincare = by_point[(5, 1, 5)]
        assert poincare["geometry"] == "Spherical"
        assert poincare["knot"] == {"r": 3, "s": 2, "hand": "left"}

    def test_72_orbifold_records(self):
        records = atlas(TorusKnot(7, 2, L), 1, (1, 3), 2)
        twos = [rec for rec in records if rec["x"] == 2]
        assert twos and all(rec["geometry"] == "Spherical" for rec in twos)
        assert all(rec["beta"] == "1pi" for rec in twos)

    def test_deterministic_order(self):
        records = atlas(TorusKnot(3, 2, L), 4, (-2, 2), 2)
        keys = [(rec["m"], rec["n"], rec["x"]) for rec in records]
        assert keys == sorted(keys)
        assert records == atlas(TorusKnot(3, 2, L), 4, (-2, 2), 2)

    def test_skips_non_primitive(self):
        records = atlas(TorusKnot(3, 2, L), 4, (2, 2), 1)
        assert all(math.gcd(rec["m"], abs(rec["n"])) == 1 for rec in records)
        assert all(rec["m"] % 2 == 1 for rec in records)
