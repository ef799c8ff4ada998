"""
cellricci - discrete Ricci curvatures on regular quasiconvex cell complexes.

Computes the combinatorial Ricci curvature of face vectors and the LLY
curvature of the face-incidence graph, cross-checks them with exact optimal
transport certificates, and evaluates the resulting spectral-gap bound.
"""

__version__ = "0.1.0"

from cellricci.config import settings
from cellricci.utils import logger

__all__ = [
    "__version__",
    "settings",
    "logger",
]
