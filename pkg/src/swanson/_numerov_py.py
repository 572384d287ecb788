"""Pure-Python Numerov sweep, the fallback when the C extension is absent.

Kept loop-for-loop identical to the compiled version in _numerov.pyx so
the two backends agree to the last bit.
"""

import numpy as np


def numerov_sweep(q, step, y0, y1):
    """Integrate y'' = q y left to right; returns the full solution array."""
    qs = [float(v) for v in q]
    n = len(qs)
    if n < 3:
        raise ValueError("need at least 3 grid points")
    h12 = step * step / 12.0
    y = [0.0] * n
    y[0] = y0
    y[1] = y1
    for i in range(1, n - 1):
        a = 2.0 * (1.0 + 5.0 * h12 * qs[i]) * y[i]
        b = (1.0 - h12 * qs[i - 1]) * y[i - 1]
        c = 1.0 - h12 * qs[i + 1]
        y[i + 1] = (a - b) / c
    return np.asarray(y, dtype=np.float64)
