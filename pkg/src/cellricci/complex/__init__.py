"""Cell-complex model, builders, validation and text format."""

from cellricci.complex.builders import (
    build_cycle,
    build_interval_grid,
    build_path,
    build_point,
    build_simplex_boundary,
    build_torus_grid,
    product,
)
from cellricci.complex.io import parse_complex_file, serialize_complex
from cellricci.complex.models import Cell, CellComplex, FaceVector, IncidencePair
from cellricci.complex.validation import (
    ValidationReport,
    connected_components,
    diameter,
    is_bipartite_by_dimension,
    require_valid,
    validate,
)

__all__ = [
    "Cell",
    "CellComplex",
    "FaceVector",
    "IncidencePair",
    "build_point",
    "build_path",
    "build_cycle",
    "build_simplex_boundary",
    "build_interval_grid",
    "build_torus_grid",
    "product",
    "parse_complex_file",
    "serialize_complex",
    "ValidationReport",
    "validate",
    "require_valid",
    "is_bipartite_by_dimension",
    "connected_components",
    "diameter",
]
