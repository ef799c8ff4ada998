"""Laplacian spectrum of the face-incidence graph and its curvature bounds."""

from cellricci.spectral.eigen import eigenvalues, first_nonzero
from cellricci.spectral.operations import (
    LaplacianMatrix,
    SpectrumReport,
    eigen_bound,
    lambda1_lower_bound,
    laplacian_matrix,
)

__all__ = [
    "eigenvalues",
    "first_nonzero",
    "LaplacianMatrix",
    "laplacian_matrix",
    "SpectrumReport",
    "lambda1_lower_bound",
    "eigen_bound",
]
