"""Shooting-method bound-state solver for -y'' + V(z) y = E y.

Independent of the finite-difference matrix pathway: Numerov integration
from both walls plus a bisection on the matching Wronskian.  Serves as
the cross-check oracle for every spectrum the matrix route produces.
"""

from __future__ import annotations

import numpy as np

from .kernels import numerov_sweep

__all__ = ["matching_defect", "shoot_eigenvalues"]

_SEED = 1e-12  # first off-wall value; overall scale is irrelevant


def _sweeps(v, step, energy):
    q = v - energy
    left = numerov_sweep(q, step, 0.0, _SEED)
    right = numerov_sweep(q[::-1].copy(), step, 0.0, _SEED)[::-1]
    return left, right


def matching_defect(v, step, energy, match_index):
    """Normalized Wronskian of the two half-solutions at the match point.

    Vanishes exactly at eigenvalues; the normalization keeps the value
    O(1) so bisection is well conditioned even under the walls where the
    raw solutions grow like exp(kappa z).
    """
    i = match_index
    left, right = _sweeps(v, step, energy)
    dl = (left[i + 1] - left[i - 1]) / (2.0 * step)
    dr = (right[i + 1] - right[i - 1]) / (2.0 * step)
    w = dl * right[i] - dr * left[i]
    scale = np.hypot(left[i], dl) * np.hypot(right[i], dr)
    if scale == 0.0:
        return 0.0
    return w / scale


def shoot_eigenvalues(potential, e_min, e_max, half_width=10.0, n_points=4001,
                      scan_step=0.25, tol=1e-10, match_z=0.7):
    """All eigenvalues of -y'' + V y = E y with y(+-L) = 0 in [e_min, e_max].

    Scans the matching defect for sign changes (scan_step must stay below
    the level spacing), then bisects each bracket down to ``tol``.
    """
    z = np.linspace(-half_width, half_width, n_points)
    step = z[1] - z[0]
    v = np.asarray(potential(z), dtype=np.float64)
    match_index = int(np.argmin(np.abs(z - match_z)))

    energies = np.arange(e_min, e_max + scan_step, scan_step)
    defects = [matching_defect(v, step, e, match_index) for e in energies]

    found = []
    for (e1, d1), (e2, d2) in zip(zip(energies, defects), zip(energies[1:], defects[1:])):
        if d1 == 0.0:
            found.append(e1)
            continue
        if d1 * d2 >= 0.0:
            continue
        lo, hi, flo = e1, e2, d1
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            fm = matching_defect(v, step, mid, match_index)
            if fm == 0.0:
                lo = hi = mid
                break
            if flo * fm < 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        found.append(0.5 * (lo + hi))
    return np.asarray(found)
