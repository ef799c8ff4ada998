"""
Dense symmetric eigenvalues by cyclic Jacobi rotations.
"""

from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from cellricci.config import settings
from cellricci.exceptions import SpectralError


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(a**2) - np.sum(np.diag(a) ** 2)))


def eigenvalues(
    matrix: np.ndarray,
    tolerance: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> List[float]:
    """
    Full spectrum of a symmetric matrix, ascending.

    Args:
        matrix: Square symmetric matrix
        tolerance: Off-diagonal Frobenius norm at which sweeps stop
        max_sweeps: Sweep cap

    Returns:
        Eigenvalues sorted ascending

    Raises:
        SpectralError: non-square or non-symmetric input, or no convergence
    """
    tolerance = settings.jacobi_tolerance if tolerance is None else tolerance
    max_sweeps = settings.jacobi_max_sweeps if max_sweeps is None else max_sweeps

    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise SpectralError("matrix is not symmetric")
    n = a.shape[0]

    sweeps = 0
    while _off_norm(a) >= tolerance:
        if sweeps >= max_sweeps:
            raise SpectralError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_norm(a):.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                cos = 1.0 / np.sqrt(t * t + 1.0)
                sin = t * cos

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = cos * col_p - sin * col_q
                a[:, q] = sin * col_p + cos * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = cos * row_p - sin * row_q
                a[q, :] = sin * row_p + cos * row_q
                a[p, q] = a[q, p] = 0.0

    logger.debug(f"Jacobi converged after {sweeps} sweeps on a {n}x{n} matrix")
    return sorted(float(x) for x in np.diag(a))


def first_nonzero(
    spectrum: Sequence[float], components: int, eps: Optional[float] = None
) -> float:
    """
    The first eigenvalue past the zero cluster of a Laplacian spectrum.

    Raises:
        SpectralError: the cluster does not have exactly ``components`` members
    """
    eps = settings.spectral_eps if eps is None else eps
    values = sorted(spectrum)
    if len(values) <= components:
        raise SpectralError("spectrum has no eigenvalue past the zero cluster")
    if any(abs(x) >= eps for x in values[:components]):
        raise SpectralError(
            f"expected {components} zero eigenvalues below {eps}, got {values[:components]}"
        )
    if values[components] < eps:
        raise SpectralError(
            f"eigenvalue {values[components]:.3e} is ambiguous at eps={eps}; tighten the solve"
        )
    return values[components]


__all__ = ["eigenvalues", "first_nonzero"]
