"""Compare the compiled region kernel against the pure-Python one.

Classifies a fixed batch of random rational cube points with both
backends, asserts they agree everywhere, and reports the timings.
Run as: python3 benchmarks/bench_kernel.py [count]
"""

import random
import sys
import time

from seifertgeo.kernel import BACKEND, classify_region_compiled, classify_region_py


def batch(count, seed=2026):
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        d1, d2, d3 = (rng.randint(1, 400) for _ in range(3))
        points.append(
            (
                rng.randint(0, d1), d1,
                rng.randint(0, d2), d2,
                rng.randint(0, d3), d3,
            )
        )
    return points


def timed(func, points):
    start = time.perf_counter()
    out = [func(*p) for p in points]
    return time.perf_counter() - start, out


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 200_000
    points = batch(count)

    py_time, py_out = timed(classify_region_py, points)
    print("python   backend: %8.3f ms  (%d points)" % (py_time * 1e3, count))

    if classify_region_compiled is None:
        print("compiled backend: not built (active backend: %s)" % BACKEND)
        return

    c_time, c_out = timed(classify_region_compiled, points)
    print("compiled backend: %8.3f ms  (%d points)" % (c_time * 1e3, count))

    assert py_out == c_out, "backends disagree"
    print("agreement: %d/%d identical" % (count, count))
    print("speedup: %.1fx" % (py_time / c_time))


if __name__ == "__main__":
    main()
