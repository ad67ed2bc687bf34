"""Dehn surgery on torus knots as small Seifert fibrations.

p/q surgery on the (r, s) torus knot (r > s > 1 coprime, handedness
explicit) yields the Seifert manifold

    (-1; (s, b1), (r, b2), (m, eps*q))

where (b1, b2) are the knot's fibre coefficients, m = |q*r*s + p| for
the left handle and |p - q*r*s| for the right, and eps is the sign of
the expression inside the absolute value.  m = 0 (the e = 0 slope,
p/q = -+ r*s) is excluded.  Surgeries are charted on the line model:
the surgery lives on the ray l_{m/n} through the origin and the
primitive point (m, n) with n = eps*q; the structure with cone angle
beta around the core sits at abscissa x = 2*pi*m/beta.

On each ray the structure is spherical for x_U < x < x_L with

    x_U = r*s/(r*s - r + s),      x_L = r*s/(r*s - r - s),

Nil at the integer-or-not abscissa x_L (when the Euler number is
nonzero) and SL2R beyond it.  Integer abscissas x in (x_U, x_L) are
the spherical orbifold labels; the cone angle there is 2*pi/x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Handedness, PiRational, TWO_PI, fiber_coeffs, gcd
from .cone3d import ConeStructure, GeometryResult, classify_cone
from .seifert import SeifertSignature


@dataclass(frozen=True)
class TorusKnot:
    r: int
    s: int
    hand: Handedness

    def __post_init__(self):
        if not (self.r > self.s > 1):
            raise ValueError(
                "torus knot needs r > s > 1, got (%d, %d)" % (self.r, self.s)
            )
        if gcd(self.r, self.s) != 1:
            raise ValueError(
                "torus knot parameters must be coprime, got (%d, %d)"
                % (self.r, self.s)
            )
        if not isinstance(self.hand, Handedness):
            raise ValueError("hand must be a Handedness value")

    def coeffs(self) -> tuple[int, int]:
        return fiber_coeffs(self.r, self.s, self.hand)

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "hand": self.hand.value}

    def __str__(self):
        return "K(%d,%d) %s" % (self.r, self.s, self.hand.value)


@dataclass(frozen=True)
class SurgerySpec:
    """Slope p/q with p >= 0 and the sign carried by q; (1, 0) is infinity."""

    knot: TorusKnot
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("slope numerator must be >= 0 (sign lives in q)")
        if (self.p, self.q) == (0, 0):
            raise ValueError("slope 0/0 is not a surgery")
        if gcd(self.p, abs(self.q)) != 1:
            raise ValueError("slope %d/%d is not reduced" % (self.p, self.q))

    def slope_text(self) -> str:
        return "%d/%d" % (self.p, self.q)


@dataclass(frozen=True)
class LinePoint:
    """Primitive lattice point (m, n) naming the ray l_{m/n}."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("line point needs m >= 0")
        if gcd(self.m, abs(self.n)) != 1:
            raise ValueError("line point (%d, %d) is not primitive" % (self.m, self.n))


def _signed_core(spec: SurgerySpec) -> int:
    rs = spec.knot.r * spec.knot.s
    if spec.knot.hand is Handedness.LEFT:
        return spec.q * rs + spec.p
    return -spec.q * rs + spec.p


def surgery_signature(spec: SurgerySpec) -> SeifertSignature:
    """Raw signature of the surgered manifold, core fibre last."""
    t = _signed_core(spec)
    if t == 0:
        raise ValueError(
            "slope %s is the e = 0 exceptional slope (m = 0)" % spec.slope_text()
        )
    b1, b2 = spec.knot.coeffs()
    eps = 1 if t > 0 else -1
    return SeifertSignature(
        -1, ((spec.knot.s, b1), (spec.knot.r, b2), (abs(t), eps * spec.q))
    )


def line_of_surgery(spec: SurgerySpec) -> LinePoint:
    t = _signed_core(spec)
    if t == 0:
        raise ValueError(
            "slope %s is the e = 0 exceptional slope (m = 0)" % spec.slope_text()
        )
    eps = 1 if t > 0 else -1
    return LinePoint(abs(t), eps * spec.q)


def surgery_of_line(knot: TorusKnot, point: LinePoint) -> SurgerySpec:
    """Inverse chart: the slope whose surgery sits on the ray l_{m/n}.

    n = 0 is the surgery at infinity (slope 1/0, only m = 1 is
    primitive); otherwise p/q = (m - r*s*n)/n for the left handle and
    (m + r*s*n)/n for the right, normalized to p >= 0.
    """
    if point.n == 0:
        if point.m != 1:
            raise ValueError("(m, 0) is primitive only for m = 1")
        return SurgerySpec(knot, 1, 0)
    rs = knot.r * knot.s
    if knot.hand is Handedness.LEFT:
        p, q = point.m - rs * point.n, point.n
    else:
        p, q = point.m + rs * point.n, point.n
    if p < 0:
        p, q = -p, -q
    elif p == 0:
        q = abs(q)
    return SurgerySpec(knot, p, q)


def x_limits(knot: TorusKnot) -> tuple[Fraction, Fraction]:
    """(x_U, x_L): abscissas of the sphericity limits on every ray."""
    rs = knot.r * knot.s
    return (
        Fraction(rs, rs - knot.r + knot.s),
        Fraction(rs, rs - knot.r - knot.s),
    )


def classify_surgery_cone(spec: SurgerySpec, beta: PiRational) -> GeometryResult:
    """Geometry of the surgered manifold with cone angle beta on the core."""
    sig = surgery_signature(spec)
    cs = ConeStructure(sig, (TWO_PI, TWO_PI, beta))
    return classify_cone(cs)


def spherical_orbifold_angles(knot: TorusKnot) -> list[tuple[int, PiRational]]:
    """Integer abscissas in the open spherical band, with their angles.

    These are the orbifold labels admitting spherical structures on
    some surgery line: x with x_U < x < x_L, cone angle 2*pi/x.
    """
    x_upper, x_lower = x_limits(knot)
    labels = []
    x = 2
    while x < x_lower:
        if x > x_upper:
            labels.append((x, PiRational(Fraction(2, x))))
        x += 1
    return labels


def nil_admissible(knot: TorusKnot) -> bool:
    """Whether x_L is an integer, i.e. Nil orbifold labels exist."""
    _, x_lower = x_limits(knot)
    return x_lower.denominator == 1


def brieskorn_surgery(a1: int, a2: int, a3: int):
    """Surgery description of the Brieskorn sphere with these multiplicities.

    For pairwise coprime 1 < a1 < a2 < a3, returns (knot, q) with
    a3 = |q*a1*a2 - 1|: the sphere is 1/q surgery on the right-handed
    (a2, a1) torus knot (equivalently 1/(-q) on the left-handed one).
    Returns None when a3 is not of that form.
    """
    if not (1 < a1 < a2 < a3):
        raise ValueError("need 1 < a1 < a2 < a3")
    if not (gcd(a1, a2) == gcd(a1, a3) == gcd(a2, a3) == 1):
        raise ValueError("multiplicities must be pairwise coprime")
    for q_num in (1 + a3, 1 - a3):
        if q_num % (a1 * a2) == 0:
            q = q_num // (a1 * a2)
            knot = TorusKnot(a2, a1, Handedness.RIGHT)
            assert abs(q * a1 * a2 - 1) == a3
            return knot, q
    return None


def atlas(knot: TorusKnot, m_max: int, n_range: tuple[int, int], k_max: int) -> list[dict]:
    """Records for every primitive ray in range and orbifold label k <= k_max.

    Each record fixes the ray (m, n), its surgery slope p/q, the
    abscissa x = k*m with cone angle beta = 2*pi/k on the core, and the
    resulting geometry.  Ordering is by (m, n, k).
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    n_lo, n_hi = n_range
    records = []
    for m in range(1, m_max + 1):
        for n in range(n_lo, n_hi + 1):
            if n == 0 and m != 1:
                continue
            if gcd(m, abs(n)) != 1:
                continue
            point = LinePoint(m, n)
            spec = surgery_of_line(knot, point)
            for k in range(1, k_max + 1):
                beta = PiRational(Fraction(2, k))
                geometry = classify_surgery_cone(spec, beta)
                records.append(
                    {
                        "knot": knot.to_json(),
                        "m": m,
                        "n": n,
                        "p": spec.p,
                        "q": spec.q,
                        "x": k * m,
                        "beta": beta.text(),
                        "geometry": str(geometry),
                    }
                )
    return records
