"""Independent brute-force oracles shared by the test modules."""

from math import isqrt

import numpy as np

BRUTE_Y_BOUND = 10**5


def pell_brute_force(m, y_max=BRUTE_Y_BOUND):
    """Smallest y in [1, y_max) with m y^2 +- 1 a square, as (x, y, sign), else None.

    Exact for m * y_max^2 < 2^53 (float square roots are then corrected in int64).
    """
    assert m * y_max * y_max < 2**53
    y = np.arange(1, y_max, dtype=np.int64)
    my2 = m * y * y
    best = None
    for n in (-1, 1):
        target = my2 + n
        x = np.rint(np.sqrt(target.astype(np.float64))).astype(np.int64)
        hits = np.nonzero(x * x == target)[0]
        if hits.size:
            i = int(hits[0])
            cand = (int(x[i]), int(y[i]), n)
            if best is None or cand[1] < best[1]:
                best = cand
    if best is not None:
        x, yy, n = best
        assert x * x - m * yy * yy == n and isqrt(x * x) == x
    return best
