"""Exact integer and rational helpers shared by the whole package.

Everything downstream (signature normalization, region classification,
sphericity limits, surgery bookkeeping) is exact rational arithmetic.
Floats appear only at the very end, in the curvature parameter and in
plot coordinates.  Angles are handled as rational multiples of pi so
that equalities such as "the cone angle sum equals pi" are decidable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

Rational = Fraction


class Handedness(Enum):
    """Chirality of a torus knot.  Never defaulted: every entry point
    that depends on it takes it explicitly."""

    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError("handedness must be 'left' or 'right', got %r" % (text,))


def gcd(a: int, b: int) -> int:
    """Non-negative gcd; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y == g == gcd(a, b) > 0.

    Raises ValueError when a == b == 0, since no positive gcd exists.
    """
    if a == 0 and b == 0:
        raise ValueError("bezout(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def reduce(num: int, den: int) -> Fraction:
    """Reduced fraction num/den with positive denominator.

    ZeroDivisionError on den == 0, exactly like Fraction itself.
    """
    return Fraction(num, den)


def _mod_inverse(a: int, n: int) -> int:
    g, x, _ = bezout(a, n)
    if g != 1:
        raise ValueError("%d has no inverse modulo %d" % (a, n))
    return x % n


def fiber_coeffs(r: int, s: int, hand: Handedness) -> tuple[int, int]:
    """Seifert coefficients (b1, b2) of the exceptional fibres of a torus knot.

    The exterior of the (r, s) torus knot fibres over the disc with two
    exceptional fibres (s, b1) and (r, b2).  The coefficients are the
    unique pair with 0 < b1 < s, 0 < b2 < r and

        -r*s + b1*r + b2*s == -1   (left handle)
        -r*s + b1*r + b2*s == +1   (right handle)

    Requires r > s > 1 and gcd(r, s) == 1.
    """
    if not (r > s > 1):
        raise ValueError("torus knot needs r > s > 1, got (%d, %d)" % (r, s))
    if gcd(r, s) != 1:
        raise ValueError("torus knot parameters must be coprime, got (%d, %d)" % (r, s))
    eps = -1 if hand is Handedness.LEFT else 1
    # b1*r == r*s + eps (mod s) reduces to b1 == eps * r^{-1} (mod s).
    b1 = (eps * _mod_inverse(r, s)) % s
    b2 = (r * s + eps - b1 * r) // s
    assert 0 < b1 < s and 0 < b2 < r
    assert -r * s + b1 * r + b2 * s == eps
    return b1, b2


_PI_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?pi$")


@dataclass(frozen=True, order=True)
class PiRational:
    """A non-negative angle written as an exact rational multiple of pi.

    The textual form is "<num>/<den>pi"; integer multiples drop the
    denominator ("2pi").  Ratios of two angles are exact Fractions.
    """

    coeff: Fraction

    def __init__(self, coeff, den=None):
        value = Fraction(coeff, den) if den is not None else Fraction(coeff)
        if value < 0:
            raise ValueError("angle must be non-negative, got %s*pi" % value)
        object.__setattr__(self, "coeff", value)

    @classmethod
    def parse(cls, text: str) -> "PiRational":
        text = text.strip().lower().replace(" ", "")
        if text == "pi":
            return cls(1)
        m = _PI_RE.match(text)
        if not m:
            raise ValueError("cannot parse angle %r (expected e.g. '2pi' or '1/3pi')" % text)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        return cls(Fraction(num, den))

    def text(self) -> str:
        if self.coeff.denominator == 1:
            return "%dpi" % self.coeff.numerator
        return "%d/%dpi" % (self.coeff.numerator, self.coeff.denominator)

    def __str__(self):
        return self.text()

    def __add__(self, other):
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff + other.coeff)

    def __sub__(self, other):
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff - other.coeff)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)):
            return PiRational(self.coeff * k)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            if other.coeff == 0:
                raise ZeroDivisionError("division by zero angle")
            return self.coeff / other.coeff
        if isinstance(other, (int, Fraction)):
            return PiRational(self.coeff / other)
        return NotImplemented

    def __bool__(self):
        return self.coeff != 0

    def __float__(self):
        return math.pi * self.coeff.numerator / self.coeff.denominator


RIGHT_ANGLE = PiRational(Fraction(1, 2))
PI = PiRational(1)
TWO_PI = PiRational(2)
