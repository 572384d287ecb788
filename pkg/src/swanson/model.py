"""Swanson model parameters, derived constants and closed-form solutions.

The non-Hermitian quadratic oscillator with couplings (omega, alpha, beta)
is similarity-equivalent, through rho = exp(lambda x^2 / 2), to a scaled
harmonic oscillator; everything downstream is phrased in the derived
constants

    lambda = (beta - alpha) / (omega - alpha - beta)
    delta^2 = sqrt(omega^2 - 4 alpha beta) / (omega - alpha - beta)
    Omega   = sqrt(omega^2 - 4 alpha beta)      (level spacing)
    J       = 2 / Omega                          (energy rescale, J*Omega = 2)

with z = delta * x reducing the Hermitian equivalent to -d^2/dz^2 + z^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics, poly
from .numerics import Grid, OperatorMatrix, diag_matrix, d2_matrix, weighted_inner

__all__ = [
    "ModelParams",
    "DerivedParams",
    "WaveSample",
    "ParameterError",
    "derive_params",
    "hermitian_potential",
    "hamiltonian_matrix",
    "oscillator_matrix_z",
    "eigenfunction",
    "exact_energy",
    "weight_vector",
    "rho_vector",
    "grid_for",
]


class ParameterError(ValueError):
    """A model-parameter invariant is violated; the message names it."""


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the quadratic oscillator omega*a+a + alpha*a^2 + beta*a+^2 + omega/2."""

    omega: float
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.kinetic <= 0:
            raise ParameterError(
                f"omega - alpha - beta must be positive, got {self.kinetic:g}")
        if self.gap_sq <= 0:
            raise ParameterError(
                f"omega^2 - 4*alpha*beta must be positive, got {self.gap_sq:g}")

    @property
    def kinetic(self):
        return self.omega - self.alpha - self.beta

    @property
    def gap_sq(self):
        return self.omega**2 - 4.0 * self.alpha * self.beta

    @property
    def is_hermitian(self):
        return self.alpha == self.beta


@dataclass(frozen=True)
class DerivedParams:
    """Similarity exponent, length and energy rescales, factorization energy.

    E defaults to the unextended value Omega/2 (z-units factorization
    energy 1); the extension machinery replaces it with E_m / J.
    """

    lam: float
    delta: float
    J: float
    Omega: float
    E: float

    @property
    def delta_sq(self):
        return self.delta**2


def derive_params(p, e_tilde=1.0):
    """Derived constants for a parameter set; e_tilde sets E = e_tilde / J."""
    omega_gap = math.sqrt(p.gap_sq)
    lam = (p.beta - p.alpha) / p.kinetic
    delta = p.gap_sq**0.25 / math.sqrt(p.kinetic)
    j_scale = 2.0 / omega_gap
    return DerivedParams(lam=lam, delta=delta, J=j_scale, Omega=omega_gap,
                         E=e_tilde / j_scale)


def grid_for(p, z_half_width=10.0, n_points=2001):
    """x-space grid covering |z| <= z_half_width in oscillator units."""
    d = derive_params(p)
    return Grid(z_half_width / d.delta, n_points)


def hermitian_potential(p, x):
    """Potential of the Hermitian equivalent: x^2 (omega^2-4ab)/(2(w-a-b)) + w/2."""
    return 0.5 * np.asarray(x) ** 2 * p.gap_sq / p.kinetic + 0.5 * p.omega


def hamiltonian_matrix(p, g):
    """Hermitian equivalent h = -(w-a-b)/2 d^2/dx^2 + V(x) on the grid."""
    kin = (-0.5 * p.kinetic) * d2_matrix(g)
    pot = diag_matrix(hermitian_potential(p, g.points), g, "V")
    return (kin + pot).relabeled("h")


def oscillator_matrix_z(p, g):
    """x-realization of the rescaled oscillator -d^2/dz^2 + z^2 (z = delta x)."""
    d = derive_params(p)
    kin = (-1.0 / d.delta_sq) * d2_matrix(g)
    pot = diag_matrix((d.delta_sq) * g.points**2, g, "z2")
    return (kin + pot).relabeled("h_tilde")


def exact_energy(n, p):
    """Closed-form level: omega/2 + (n + 1/2) * sqrt(omega^2 - 4 alpha beta)."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    return 0.5 * p.omega + (n + 0.5) * math.sqrt(p.gap_sq)


def weight_vector(p, g):
    """Metric weight exp(lambda x^2) sampled on the grid."""
    d = derive_params(p)
    return np.exp(d.lam * g.points**2)


def rho_vector(p, g):
    """Similarity map rho = exp(lambda x^2 / 2) sampled on the grid."""
    d = derive_params(p)
    return np.exp(0.5 * d.lam * g.points**2)


@dataclass(frozen=True)
class WaveSample:
    """Function samples on a grid with a fixed normalization convention."""

    values: np.ndarray
    grid: Grid
    norm_convention: str = "weighted-unit-norm"

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.shape != (self.grid.n_points,):
            raise numerics.GridMismatchError("sample length does not match grid")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite wavefunction sample")
        object.__setattr__(self, "values", v)


def eigenfunction(n, p, g):
    """Sampled eigenfunction psi_n = N_n exp(-x^2(lam+delta^2)/2) H_n(delta x).

    These diagonalize the non-Hermitian operator itself and are
    orthonormal under the weight exp(lambda x^2); the normalization
    constant is imposed numerically through that weighted quadrature
    rather than taken from a closed form.  Phase: the largest-magnitude
    sample is made real positive.
    """
    d = derive_params(p)
    decay = d.lam + d.delta_sq
    if decay <= 0:
        raise ParameterError(
            f"non-decaying eigenfunction regime: lambda + delta^2 = {decay:g} <= 0")
    x = g.points
    values = np.exp(-0.5 * decay * x**2) * poly.eval_poly(poly.hermite(n), d.delta * x)
    norm_sq = weighted_inner(values, values, weight_vector(p, g), g)
    values = values / math.sqrt(abs(norm_sq))
    i = int(np.argmax(np.abs(values)))
    if values[i] < 0:
        values = -values
    return WaveSample(values, g)
