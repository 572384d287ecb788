"""Grids, dense operator matrices, eigensolves and residual measures.

This is the verification substrate: second-order central differences with
Dirichlet walls realize every differential operator, diagonal similarity
conjugations map between Hermitian and non-Hermitian pictures, and
operator identities are scored by their action on smooth decaying probe
states restricted to the grid interior.

Matrix identities between composed stencils never hold entrywise (for
example D1 @ D1 differs from D2 by O(1/spacing^2) entries even though both
act as d^2/dx^2 on smooth samples), so the residual of an identity is
defined through its action:

    r = max over probes v of  |sum_j T_j v| / sum_j |T_j v|

with norms over interior points only.  r is dimensionless in [0, 1],
second-order small when the identity holds, and O(1) when it fails.

All objects are immutable after construction; distinct builds and solves
may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

__all__ = [
    "Grid",
    "OperatorMatrix",
    "SpectralReport",
    "GridMismatchError",
    "d1_matrix",
    "d2_matrix",
    "diag_matrix",
    "identity_matrix",
    "conjugate_by_diagonal",
    "commutator",
    "dagger",
    "mat_mul",
    "mat_add",
    "scalar_mul",
    "symmetric_eigensolve",
    "weighted_inner",
    "trapezoid_weights",
    "probe_family",
    "action_residual",
]

HERMITICITY_RTOL = 1e-12
INTERIOR_BUFFER = 10  # points shaved per side: |x| <= L - 10*spacing


class GridMismatchError(ValueError):
    """Operands live on different grids."""


@dataclass(frozen=True)
class Grid:
    """Uniform symmetric grid on [-L, L] with an odd point count.

    Oddness puts x = 0 exactly on the grid, which parity checks rely on.
    """

    half_width: float
    n_points: int
    points: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.half_width <= 0:
            raise ValueError("grid half width must be positive")
        if self.n_points < 5 or self.n_points % 2 == 0:
            raise ValueError("n_points must be odd and at least 5")
        pts = np.linspace(-self.half_width, self.half_width, self.n_points)
        pts[self.n_points // 2] = 0.0
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def spacing(self):
        return 2.0 * self.half_width / (self.n_points - 1)

    def interior(self, buffer_points=INTERIOR_BUFFER):
        """Slice of points with |x| <= L - buffer*spacing."""
        return slice(buffer_points, self.n_points - buffer_points)

    def refined(self):
        """Same extent at half the spacing (for convergence-order checks)."""
        return Grid(self.half_width, 2 * self.n_points - 1)


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix realization of an operator on a grid."""

    mat: np.ndarray
    grid: Grid
    label: str = ""

    def __post_init__(self):
        m = np.asarray(self.mat)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("operator matrix must be square")
        if m.shape[0] != self.grid.n_points:
            raise GridMismatchError("matrix dimension does not match grid")
        if not np.all(np.isfinite(m)):
            raise ValueError(f"non-finite entries in operator {self.label!r}")
        object.__setattr__(self, "mat", m)

    def _check(self, other):
        if self.grid is not other.grid and self.grid != other.grid:
            raise GridMismatchError(
                f"operators {self.label!r} and {other.label!r} live on different grids"
            )

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            self._check(other)
            return OperatorMatrix(self.mat @ other.mat, self.grid,
                                  f"({self.label})({other.label})")
        return self.mat @ other  # plain vector / array

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return OperatorMatrix(self.mat + other.mat, self.grid,
                              f"{self.label}+{other.label}")

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return OperatorMatrix(self.mat - other.mat, self.grid,
                              f"{self.label}-{other.label}")

    def __mul__(self, scalar):
        return OperatorMatrix(self.mat * scalar, self.grid, self.label)

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1.0)

    def _coerce(self, other):
        if isinstance(other, OperatorMatrix):
            return other
        if np.isscalar(other):  # scalars broadcast as multiples of identity
            return identity_matrix(self.grid) * other
        raise TypeError(f"cannot combine OperatorMatrix with {type(other).__name__}")

    def dagger(self):
        return OperatorMatrix(self.mat.conj().T, self.grid, f"{self.label}^+")

    def apply(self, vec):
        return self.mat @ np.asarray(vec)

    def relabeled(self, label):
        return OperatorMatrix(self.mat, self.grid, label)


@dataclass(frozen=True)
class SpectralReport:
    """Sorted eigenvalues with per-pair residual norms and run metadata."""

    eigenvalues: np.ndarray
    residual_norms: np.ndarray
    metadata: dict
    eigenvectors: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        ev = np.asarray(self.eigenvalues, dtype=float)
        if np.any(np.diff(ev) < 0):
            raise ValueError("eigenvalues must be ascending")
        if np.any(np.asarray(self.residual_norms) < 0):
            raise ValueError("residual norms must be nonnegative")


# -- stencils ----------------------------------------------------------------


def d2_matrix(g):
    """Central-difference d^2/dx^2 with Dirichlet walls (symmetric matrix)."""
    n, s = g.n_points, g.spacing
    m = np.zeros((n, n))
    idx = np.arange(n)
    m[idx, idx] = -2.0 / s**2
    m[idx[:-1], idx[:-1] + 1] = 1.0 / s**2
    m[idx[1:], idx[1:] - 1] = 1.0 / s**2
    return OperatorMatrix(m, g, "d2")


def d1_matrix(g):
    """Central-difference d/dx with Dirichlet walls (antisymmetric matrix)."""
    n, s = g.n_points, g.spacing
    m = np.zeros((n, n))
    idx = np.arange(n)
    m[idx[:-1], idx[:-1] + 1] = 0.5 / s
    m[idx[1:], idx[1:] - 1] = -0.5 / s
    return OperatorMatrix(m, g, "d1")


def diag_matrix(f, g, label="diag"):
    """Multiplication operator for a callable or an array of samples."""
    vals = np.asarray(f(g.points) if callable(f) else f)
    if vals.shape != (g.n_points,):
        raise ValueError("diagonal samples do not match grid")
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite sample in multiplication operator")
    return OperatorMatrix(np.diag(vals), g, label)


def identity_matrix(g):
    return OperatorMatrix(np.eye(g.n_points), g, "1")


def conjugate_by_diagonal(op, d):
    """D M D^{-1} with D = diag(d), d strictly positive.

    Exactly isospectral to M: similarity by an invertible diagonal.
    """
    d = np.asarray(d, dtype=float)
    if d.shape != (op.grid.n_points,):
        raise ValueError("diagonal length does not match grid")
    if np.any(d <= 0):
        raise ValueError("conjugation diagonal must be strictly positive")
    m = (d[:, None] * op.mat) / d[None, :]
    return OperatorMatrix(m, op.grid, f"conj({op.label})")


# -- operator ring helpers (function spellings of the dunder ops) ------------


def commutator(a, b):
    return (a @ b - b @ a).relabeled(f"[{a.label},{b.label}]")


def dagger(a):
    return a.dagger()


def mat_mul(a, b):
    return a @ b


def mat_add(a, b):
    return a + b


def scalar_mul(c, a):
    return a * c


# -- eigensolves --------------------------------------------------------------


def _is_real_tridiagonal(m):
    if np.iscomplexobj(m) and np.any(np.abs(m.imag) > 0):
        return False
    band = np.triu(np.abs(m), 2)
    return not np.any(band) and not np.any(np.tril(np.abs(m), -2))


def symmetric_eigensolve(op, k, metadata=None):
    """k lowest eigenpairs of a Hermitian operator matrix.

    Rejects non-Hermitian input: spectra of non-Hermitian operators are
    obtained by eigensolving their Hermitian conjugation partner and
    mapping eigenvectors through the exact diagonal similarity, never by
    a general nonsymmetric solver.

    Real symmetric tridiagonal input (every bare Schroedinger operator
    here) is routed to the banded solver, which is much faster than the
    dense path at identical semantics.
    """
    m = op.mat
    scale = np.max(np.abs(m))
    herm_defect = np.max(np.abs(m - m.conj().T))
    if herm_defect > HERMITICITY_RTOL * max(scale, 1.0):
        raise ValueError(
            f"operator {op.label!r} is not Hermitian (defect {herm_defect:.3e}); "
            "diagonalize its conjugation partner and map back through "
            "conjugate_by_diagonal instead"
        )
    k = int(k)
    if not 1 <= k <= op.grid.n_points:
        raise ValueError("eigenpair count out of range")

    if _is_real_tridiagonal(m):
        w, v = scipy.linalg.eigh_tridiagonal(
            np.real(np.diag(m)).copy(), np.real(np.diag(m, 1)).copy(),
            select="i", select_range=(0, k - 1))
    else:
        herm = 0.5 * (m + m.conj().T)
        w, v = scipy.linalg.eigh(herm, subset_by_index=(0, k - 1))

    order = np.argsort(w)
    w, v = w[order], v[:, order]
    for j in range(v.shape[1]):  # deterministic phase: largest entry positive
        i = int(np.argmax(np.abs(v[:, j])))
        if np.real(v[i, j]) < 0:
            v[:, j] = -v[:, j]
    residuals = np.linalg.norm(m @ v - v * w[None, :], axis=0)
    meta = {"grid": (op.grid.half_width, op.grid.n_points), "label": op.label}
    meta.update(metadata or {})
    return SpectralReport(w, residuals, meta, eigenvectors=v)


# -- quadrature and inner products --------------------------------------------


def trapezoid_weights(g):
    w = np.full(g.n_points, g.spacing)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def weighted_inner(f, g_vec, weight, grid):
    """Trapezoid quadrature of conj(f) * weight * g."""
    f = np.asarray(f)
    g_vec = np.asarray(g_vec)
    weight = np.asarray(weight)
    if not (f.shape == g_vec.shape == weight.shape == (grid.n_points,)):
        raise GridMismatchError("inner-product operands do not share the grid")
    return np.sum(trapezoid_weights(grid) * np.conj(f) * weight * g_vec)


# -- probe states and action residuals ----------------------------------------


def probe_family(grid, z_scale=1.0, width=2.0, count=6):
    """Orthonormal smooth decaying probes z^k exp(-z^2 / (2 width^2)).

    z = z_scale * x maps the grid to the natural oscillator coordinate.
    Probes are deliberately wider than the physical bound states: identity
    defects scale with probe derivatives, and soft probes keep the
    second-order truncation constants small without touching the walls.
    """
    z = z_scale * grid.points
    cols = np.stack([z**k * np.exp(-(z**2) / (2.0 * width**2)) for k in range(count)],
                    axis=1)
    q, _ = np.linalg.qr(cols)
    probes = []
    for j in range(count):
        v = q[:, j]
        i = int(np.argmax(np.abs(v)))
        probes.append(v if v[i] >= 0 else -v)
    return probes


def action_residual(terms, probes, interior, rtol_skip=1e-9):
    """Score an identity sum_j T_j = 0 by its action on probe states.

    For each probe v the score is |sum T_j v| / sum |T_j v| over interior
    points; the worst probe wins.  Probes on which every term nearly
    vanishes (annihilated states) are skipped via ``rtol_skip``.
    Returns (max_residual, per_probe_list).
    """
    mats = [t.mat if isinstance(t, OperatorMatrix) else np.asarray(t) for t in terms]
    per_probe = []
    for v in probes:
        images = [m @ v for m in mats]
        denom = sum(np.linalg.norm(im[interior]) for im in images)
        overall = max(np.linalg.norm(m, ord="fro") for m in mats) * np.linalg.norm(v)
        if denom <= rtol_skip * max(overall, 1.0):
            per_probe.append(None)
            continue
        num = np.linalg.norm(sum(images)[interior])
        per_probe.append(num / denom)
    kept = [r for r in per_probe if r is not None]
    if not kept:
        return 0.0, per_probe
    return max(kept), per_probe
