"""Backend selection for the exact region classifier.

The compiled kernel is preferred when the extension built; otherwise
the pure-Python kernel is used.  Both implement the identical decision
tree, and benchmarks/bench_kernel.py compares them.  The compiled path
is restricted to inputs below 2**20 so that its 64-bit products cannot
overflow; larger inputs silently take the arbitrary-precision path and
produce the same answer.
"""

from __future__ import annotations

import os

from . import _kernel_py

HYPERBOLIC = _kernel_py.HYPERBOLIC
EUCLIDEAN_FACE = _kernel_py.EUCLIDEAN_FACE
SPHERICAL_INTERIOR = _kernel_py.SPHERICAL_INTERIOR
SPHERICAL_EDGE = _kernel_py.SPHERICAL_EDGE
NO_STRUCTURE_FACE = _kernel_py.NO_STRUCTURE_FACE
DEGENERATE_BOUNDARY = _kernel_py.DEGENERATE_BOUNDARY
OUTSIDE = _kernel_py.OUTSIDE

classify_region_py = _kernel_py.classify_region

if os.environ.get("SEIFERTGEO_PURE_PYTHON"):
    _kernel_c = None
    classify_region_compiled = None
    BACKEND = "python"
else:
    try:
        from . import _kernel_c

        classify_region_compiled = _kernel_c.classify_region
        BACKEND = "compiled"
    except ImportError:
        _kernel_c = None
        classify_region_compiled = None
        BACKEND = "python"

# Inputs below this bound keep every product of three factors < 2**63.
_C_LIMIT = 1 << 20


def classify_region(n1: int, d1: int, n2: int, d2: int, n3: int, d3: int) -> int:
    if classify_region_compiled is not None and (
        n1 < _C_LIMIT and d1 < _C_LIMIT
        and n2 < _C_LIMIT and d2 < _C_LIMIT
        and n3 < _C_LIMIT and d3 < _C_LIMIT
        and n1 > -_C_LIMIT and n2 > -_C_LIMIT and n3 > -_C_LIMIT
        and d1 > 0 and d2 > 0 and d3 > 0
    ):
        return classify_region_compiled(n1, d1, n2, d2, n3, d3)
    return classify_region_py(n1, d1, n2, d2, n3, d3)
