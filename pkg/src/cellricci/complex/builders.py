"""
Builders for the corpus complexes: points, paths, cycles, simplex
boundaries, products and the grids/tori made from them.
"""

from functools import reduce
from itertools import combinations
from typing import Dict, List, Sequence

from loguru import logger

from cellricci.complex.models import Cell, CellComplex, IncidencePair
from cellricci.exceptions import InvalidParameterError


def _summarise(name: str, complex_: CellComplex) -> CellComplex:
    logger.info(f"Built {name}: f-vector {complex_.f_vector()}")
    return complex_


def build_point() -> CellComplex:
    """A single 0-cell; the unit for ``product``."""
    return CellComplex([Cell("p", 0)], [])


def build_path(length: int) -> CellComplex:
    """
    Path with ``length`` edges.

    Vertices ``v0..v{length}``, edges ``e0..e{length-1}`` with
    boundary ``e_i = v_{i+1} - v_i``.
    """
    if length < 1:
        raise InvalidParameterError(f"path length must be >= 1, got {length}")

    cells = [Cell(f"v{i}", 0) for i in range(length + 1)]
    cells += [Cell(f"e{i}", 1, label=f"[v{i},v{i + 1}]") for i in range(length)]
    incidences: List[IncidencePair] = []
    for i in range(length):
        incidences.append(IncidencePair(f"e{i}", f"v{i + 1}", 1))
        incidences.append(IncidencePair(f"e{i}", f"v{i}", -1))
    return CellComplex(cells, incidences)


def build_cycle(k: int) -> CellComplex:
    """Cycle with ``k`` vertices and ``k`` edges, ``e_i = v_{i+1 mod k} - v_i``."""
    if k < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got {k}")

    cells = [Cell(f"v{i}", 0) for i in range(k)]
    cells += [Cell(f"e{i}", 1, label=f"[v{i},v{(i + 1) % k}]") for i in range(k)]
    incidences: List[IncidencePair] = []
    for i in range(k):
        incidences.append(IncidencePair(f"e{i}", f"v{(i + 1) % k}", 1))
        incidences.append(IncidencePair(f"e{i}", f"v{i}", -1))
    return CellComplex(cells, incidences)


def build_simplex_boundary(n: int) -> CellComplex:
    """
    Boundary C^n of the (n+1)-simplex.

    Cells are the nonempty proper subsets of {v0, ..., v{n+1}}; a subset of
    size k+1 is a k-cell with id ``"v0v2v3"`` and label ``"[v0,v2,v3]"``.
    Removing the j-th vertex (in increasing order) gives a face with
    incidence sign (-1)^j.

    Args:
        n: Dimension of the sphere, n >= 1

    Returns:
        CellComplex: f-vector (C(n+2, 1), ..., C(n+2, n+1))
    """
    if n < 1:
        raise InvalidParameterError(
            f"simplex boundary needs n >= 1, got {n}: C^0 is two isolated points"
        )

    vertices = [f"v{i}" for i in range(n + 2)]
    cells: List[Cell] = []
    incidences: List[IncidencePair] = []
    for size in range(1, n + 2):
        for subset in combinations(vertices, size):
            cell_id = "".join(subset)
            cells.append(Cell(cell_id, size - 1, label=f"[{','.join(subset)}]"))
            if size == 1:
                continue
            for j in range(size):
                face = "".join(subset[:j] + subset[j + 1 :])
                incidences.append(IncidencePair(cell_id, face, (-1) ** j))
    return _summarise(f"C^{n}", CellComplex(cells, incidences))


def product(a: CellComplex, b: CellComplex) -> CellComplex:
    """
    Cartesian product with cells ``x*y`` of dimension dim x + dim y.

    Signs follow d(x*y) = dx*y + (-1)^{dim x} x*dy.
    """
    cells: Dict[str, Cell] = {}
    for x in a:
        for y in b:
            cell_id = f"{x.id}*{y.id}"
            if cell_id in cells:
                raise InvalidParameterError(
                    f"product cell id {cell_id} is ambiguous; rename factor cells"
                )
            cells[cell_id] = Cell(cell_id, x.dim + y.dim, label=f"{x.label}x{y.label}")

    incidences: List[IncidencePair] = []
    for x in a:
        for y in b:
            tau = f"{x.id}*{y.id}"
            for face, sign in a.boundary(x.id).items():
                incidences.append(IncidencePair(tau, f"{face}*{y.id}", sign))
            parity = -1 if x.dim % 2 else 1
            for face, sign in b.boundary(y.id).items():
                incidences.append(IncidencePair(tau, f"{x.id}*{face}", parity * sign))

    result = CellComplex(cells.values(), incidences)
    logger.debug(f"Product of {a.f_vector()} and {b.f_vector()}: {result.f_vector()}")
    return result


def build_interval_grid(lengths: Sequence[int]) -> CellComplex:
    """Cube complex: product of paths with ``lengths[i]`` edges each."""
    if not lengths:
        raise InvalidParameterError("grid needs at least one length")
    grid = reduce(product, [build_path(length) for length in lengths])
    return _summarise(f"grid{list(lengths)}", grid)


def build_torus_grid(k1: int, k2: int) -> CellComplex:
    """k1 x k2 square grid with opposite sides identified."""
    for k in (k1, k2):
        if k < 4:
            raise InvalidParameterError(
                f"torus side {k} < 4: opposite squares would share more than an "
                "edge and the complex would not be regular"
            )
    return _summarise(f"torus({k1},{k2})", product(build_cycle(k1), build_cycle(k2)))


__all__ = [
    "build_point",
    "build_path",
    "build_cycle",
    "build_simplex_boundary",
    "product",
    "build_interval_grid",
    "build_torus_grid",
]
