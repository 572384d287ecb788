"""Swanson oscillator toolkit.

Constructs the non-Hermitian quadratic (Swanson) oscillator, its Hermitian
equivalents, the 1-step rational extension built from an even pseudo-Hermite
seed, and a separable two-dimensional generalization; numerically certifies
every operator identity, spectrum and intertwining relation in the chain.
"""

from .kernels import BACKEND as KERNEL_BACKEND
from .model import (
    DerivedParams,
    ModelParams,
    ParameterError,
    WaveSample,
    derive_params,
    eigenfunction,
    exact_energy,
    grid_for,
    hamiltonian_matrix,
    hermitian_potential,
    weight_vector,
)
from .numerics import Grid, OperatorMatrix, SpectralReport, symmetric_eigensolve
from .poly import Polynomial, certify_nodeless, hermite, pseudo_hermite

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "Grid",
    "OperatorMatrix",
    "SpectralReport",
    "Polynomial",
    "ModelParams",
    "DerivedParams",
    "ParameterError",
    "WaveSample",
    "certify_nodeless",
    "derive_params",
    "eigenfunction",
    "exact_energy",
    "grid_for",
    "hamiltonian_matrix",
    "hermite",
    "hermitian_potential",
    "pseudo_hermite",
    "symmetric_eigensolve",
    "weight_vector",
    "__version__",
]
