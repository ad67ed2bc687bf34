# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled twin of seifertgeo._kernel_py.

Same region codes, same decision tree, but on 64-bit integers.  The
dispatcher in seifertgeo.kernel only routes here when every numerator
and denominator is below 2**20, so the triple products stay well below
2**63 and cannot overflow.
"""

HYPERBOLIC = 0
EUCLIDEAN_FACE = 1
SPHERICAL_INTERIOR = 2
SPHERICAL_EDGE = 3
NO_STRUCTURE_FACE = 4
DEGENERATE_BOUNDARY = 5
OUTSIDE = -1


def classify_region(long long n1, long long d1, long long n2, long long d2,
                    long long n3, long long d3):
    """Region code of the point (n1/d1, n2/d2, n3/d3) in units of pi."""
    cdef long long unit, s1, s2, s3, total

    if d1 <= 0 or d2 <= 0 or d3 <= 0:
        return OUTSIDE
    if n1 < 0 or n2 < 0 or n3 < 0 or n1 > d1 or n2 > d2 or n3 > d3:
        return OUTSIDE

    unit = d1 * d2 * d3
    s1 = n1 * d2 * d3
    s2 = n2 * d1 * d3
    s3 = n3 * d1 * d2
    total = s1 + s2 + s3

    if total < unit:
        return HYPERBOLIC
    if total == unit:
        if n1 > 0 and n2 > 0 and n3 > 0:
            return EUCLIDEAN_FACE
        return DEGENERATE_BOUNDARY

    if n1 == d1 and s2 == s3 and n2 > 0:
        return SPHERICAL_EDGE
    if n2 == d2 and s1 == s3 and n1 > 0:
        return SPHERICAL_EDGE
    if n3 == d3 and s1 == s2 and n1 > 0:
        return SPHERICAL_EDGE
    if n1 == 0 or n2 == 0 or n3 == 0 or n1 == d1 or n2 == d2 or n3 == d3:
        return DEGENERATE_BOUNDARY
    if s1 - s2 + s3 < unit and -s1 + s2 + s3 < unit and s1 + s2 - s3 < unit:
        return SPHERICAL_INTERIOR
    return NO_STRUCTURE_FACE
