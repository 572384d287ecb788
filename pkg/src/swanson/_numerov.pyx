# Compiled Numerov sweep for y'' = q(z) y on a uniform grid.
# Hot kernel of the shooting-method spectrum oracle; mirrors
# swanson._numerov_py.numerov_sweep exactly.

import numpy as np

cimport numpy as cnp

cnp.import_array()


def numerov_sweep(double[::1] q, double step, double y0, double y1):
    """Integrate y'' = q y left to right; returns the full solution array."""
    cdef Py_ssize_t n = q.shape[0]
    if n < 3:
        raise ValueError("need at least 3 grid points")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] y = out
    cdef double h12 = step * step / 12.0
    cdef Py_ssize_t i
    cdef double a, b, c
    y[0] = y0
    y[1] = y1
    for i in range(1, n - 1):
        a = 2.0 * (1.0 + 5.0 * h12 * q[i]) * y[i]
        b = (1.0 - h12 * q[i - 1]) * y[i - 1]
        c = 1.0 - h12 * q[i + 1]
        y[i + 1] = (a - b) / c
    return out
