"""
Immutable graded cell-complex model.

A complex is a set of cells graded by dimension together with signed
incidence numbers between cells of consecutive dimensions. The face-incidence
graph G_M (cells as nodes, vectors as edges) is derived lazily.
"""

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from cellricci.exceptions import ComplexValidationError, StructuralError


@dataclass(frozen=True)
class Cell:
    """A p-cell; ``id`` is a whitespace-free token, ``label`` is cosmetic."""

    id: str
    dim: int
    label: str = ""

    def __post_init__(self) -> None:
        if not self.id or any(ch.isspace() for ch in self.id):
            raise ComplexValidationError(f"invalid cell id {self.id!r}")
        if self.dim < 0:
            raise ComplexValidationError(f"cell {self.id} has negative dimension")
        if not self.label:
            object.__setattr__(self, "label", self.id)

    @property
    def sort_key(self) -> Tuple[int, str]:
        return (self.dim, self.id)


@dataclass(frozen=True)
class IncidencePair:
    """Signed incidence (-1)^{tau > sigma} between a (p+1)-cell and a p-cell."""

    tau: str
    sigma: str
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ComplexValidationError(
                f"incidence {self.tau}>{self.sigma} has sign {self.sign}, expected +1 or -1"
            )


@dataclass(frozen=True, order=True)
class FaceVector:
    """An incident pair (tau > sigma) with dim tau = dim sigma + 1."""

    tau: str
    sigma: str

    def __str__(self) -> str:
        return f"({self.tau}>{self.sigma})"


class CellComplex:
    """
    Graded poset of cells with signed incidence numbers.

    The complex is frozen after construction: mappings are exposed as
    read-only views and derived structure is cached on first use.
    """

    def __init__(
        self,
        cells: Iterable[Cell],
        incidences: Iterable[IncidencePair],
    ) -> None:
        cell_map: Dict[str, Cell] = {}
        for cell in cells:
            if cell.id in cell_map:
                raise ComplexValidationError(f"duplicate cell id {cell.id}")
            cell_map[cell.id] = cell

        signs: Dict[Tuple[str, str], int] = {}
        faces: Dict[str, List[str]] = {cid: [] for cid in cell_map}
        cofaces: Dict[str, List[str]] = {cid: [] for cid in cell_map}
        for pair in incidences:
            for endpoint in (pair.tau, pair.sigma):
                if endpoint not in cell_map:
                    raise ComplexValidationError(
                        f"incidence {pair.tau}>{pair.sigma} references unknown cell {endpoint}"
                    )
            if cell_map[pair.tau].dim != cell_map[pair.sigma].dim + 1:
                raise ComplexValidationError(
                    f"incidence {pair.tau}>{pair.sigma} does not join consecutive dimensions"
                )
            key = (pair.tau, pair.sigma)
            if key in signs:
                raise ComplexValidationError(
                    f"duplicate incidence {pair.tau}>{pair.sigma}"
                )
            signs[key] = pair.sign
            faces[pair.tau].append(pair.sigma)
            cofaces[pair.sigma].append(pair.tau)

        ordered = sorted(cell_map.values(), key=lambda c: c.sort_key)
        self._cells = MappingProxyType({c.id: c for c in ordered})
        self._signs = MappingProxyType(
            {
                k: signs[k]
                for k in sorted(signs, key=lambda k: (cell_map[k[0]].dim, k[0], k[1]))
            }
        )
        self._faces = MappingProxyType({k: tuple(sorted(v)) for k, v in faces.items()})
        self._cofaces = MappingProxyType(
            {k: tuple(sorted(v)) for k, v in cofaces.items()}
        )
        self._hash = hash(
            (frozenset(self._cells.values()), frozenset(self._signs.items()))
        )
        self._frozen = True

    def __setattr__(self, name: str, value) -> None:
        if getattr(self, "_frozen", False):
            raise AttributeError("CellComplex is immutable")
        super().__setattr__(name, value)

    def __reduce__(self):
        return (_rebuild_complex, (tuple(self._cells.values()), self.incidence_pairs()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellComplex):
            return NotImplemented
        return dict(self._cells) == dict(other._cells) and dict(self._signs) == dict(
            other._signs
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<CellComplex(dim={self.dim}, f_vector={self.f_vector()})>"

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell_id: object) -> bool:
        return cell_id in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._cells.values())

    # ------------------------------------------------------------------
    # Cells and incidences
    # ------------------------------------------------------------------

    @property
    def cells(self) -> Mapping[str, Cell]:
        return self._cells

    @property
    def incidences(self) -> Mapping[Tuple[str, str], int]:
        return self._signs

    @property
    def dim(self) -> int:
        """Top dimension n (-1 for the empty complex)."""
        return max((c.dim for c in self._cells.values()), default=-1)

    def cell(self, cell_id: str) -> Cell:
        try:
            return self._cells[cell_id]
        except KeyError:
            raise StructuralError(f"cell {cell_id} is not in the complex") from None

    def cell_ids(self) -> Tuple[str, ...]:
        """Cell ids in canonical order (dim, then id)."""
        return tuple(self._cells)

    def cells_of_dim(self, p: int) -> Tuple[str, ...]:
        return tuple(cid for cid, c in self._cells.items() if c.dim == p)

    def f_vector(self) -> Tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for c in self._cells.values():
            counts[c.dim] += 1
        return tuple(counts)

    def incidence_pairs(self) -> Tuple[IncidencePair, ...]:
        return tuple(IncidencePair(t, s, sign) for (t, s), sign in self._signs.items())

    def sign(self, tau: str, sigma: str) -> int:
        try:
            return self._signs[(tau, sigma)]
        except KeyError:
            raise StructuralError(f"({tau}>{sigma}) is not a vector") from None

    def boundary(self, cell_id: str) -> Dict[str, int]:
        """Signed boundary chain of a cell."""
        return {s: self._signs[(cell_id, s)] for s in self.faces(cell_id)}

    def faces(self, cell_id: str) -> Tuple[str, ...]:
        """(p-1)-faces of a p-cell."""
        self.cell(cell_id)
        return self._faces[cell_id]

    def cofaces(self, cell_id: str) -> Tuple[str, ...]:
        """(p+1)-cells having the cell as a face."""
        self.cell(cell_id)
        return self._cofaces[cell_id]

    def neighbors(self, cell_id: str) -> Tuple[str, ...]:
        """Gamma(sigma): cofaces followed by faces."""
        return self.cofaces(cell_id) + self.faces(cell_id)

    def degree(self, cell_id: str) -> int:
        return len(self.cofaces(cell_id)) + len(self.faces(cell_id))

    def is_isolated(self, cell_id: str) -> bool:
        return self.degree(cell_id) == 0

    # ------------------------------------------------------------------
    # Vectors
    # ------------------------------------------------------------------

    def vector_key(self, v: FaceVector) -> Tuple[int, str, str]:
        """Canonical ordering of vectors: dim of tau, then ids."""
        return (self.cell(v.tau).dim, v.tau, v.sigma)

    @cached_property
    def _vectors(self) -> Tuple[FaceVector, ...]:
        return tuple(FaceVector(t, s) for t, s in self._signs)

    def vectors(self) -> Tuple[FaceVector, ...]:
        return self._vectors

    def has_vector(self, v: FaceVector) -> bool:
        return (v.tau, v.sigma) in self._signs

    def require_vector(self, v: FaceVector) -> FaceVector:
        if not self.has_vector(v):
            raise StructuralError(f"{v} is not a vector of the complex")
        return v

    # ------------------------------------------------------------------
    # Closures and the face-incidence graph
    # ------------------------------------------------------------------

    @cached_property
    def _closures(self) -> Dict[str, FrozenSet[str]]:
        closures: Dict[str, FrozenSet[str]] = {}
        for cid in self._cells:  # ascending dimension
            closure = {cid}
            for face in self._faces[cid]:
                closure |= closures[face]
            closures[cid] = frozenset(closure)
        return closures

    def closure(self, cell_id: str) -> FrozenSet[str]:
        """The closed face set of a cell (the cell and all its iterated faces)."""
        self.cell(cell_id)
        return self._closures[cell_id]

    @cached_property
    def _graph(self) -> nx.Graph:
        graph = nx.Graph()
        for cid, c in self._cells.items():
            graph.add_node(cid, dim=c.dim)
        graph.add_edges_from(self._signs)
        return graph

    def graph(self) -> nx.Graph:
        """G_M as a networkx graph (shared; treat as read-only)."""
        return self._graph

    @cached_property
    def _distances(self) -> Dict[str, Dict[str, int]]:
        return dict(nx.all_pairs_shortest_path_length(self._graph))

    def distance(self, a: str, b: str) -> Optional[int]:
        """Hop distance in G_M, or None when a and b lie in different components."""
        self.cell(a)
        self.cell(b)
        return self._distances[a].get(b)

    def distances_from(self, cell_id: str) -> Mapping[str, int]:
        self.cell(cell_id)
        return MappingProxyType(self._distances[cell_id])


def _rebuild_complex(
    cells: Tuple[Cell, ...], incidences: Tuple[IncidencePair, ...]
) -> CellComplex:
    return CellComplex(cells, incidences)


__all__ = ["Cell", "IncidencePair", "FaceVector", "CellComplex"]
