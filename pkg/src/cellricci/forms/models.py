"""
Sparse combinatorial forms.

Missing entries read as 0. Values may be ints, floats or Fractions; the
operators keep whatever arithmetic the inputs use, so rational inputs give
exact results.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Dict, Mapping, Tuple

import numpy as np

from cellricci.complex.models import CellComplex, FaceVector
from cellricci.exceptions import StructuralError
from cellricci.utils.rationals import Number


def _freeze(values: Mapping) -> Mapping:
    return MappingProxyType({k: v for k, v in values.items() if v != 0})


@dataclass(frozen=True)
class ZeroForm:
    """f: cell id -> value."""

    values: Mapping[str, Number] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _freeze(self.values))

    def __getitem__(self, cell_id: str) -> Number:
        return self.values.get(cell_id, 0)

    @classmethod
    def from_function(cls, c: CellComplex, fn: Callable[[str], Number]) -> "ZeroForm":
        return cls({cid: fn(cid) for cid in c.cell_ids()})

    @classmethod
    def indicator(cls, cell_id: str) -> "ZeroForm":
        return cls({cell_id: 1})

    @classmethod
    def random(cls, c: CellComplex, rng: np.random.Generator) -> "ZeroForm":
        return cls(dict(zip(c.cell_ids(), rng.standard_normal(len(c)).tolist())))

    def to_vector(self, c: CellComplex) -> np.ndarray:
        """Dense values in the canonical cell order."""
        return np.array([float(self[cid]) for cid in c.cell_ids()])


@dataclass(frozen=True)
class OneForm:
    """omega: vector (tau > sigma) -> omega^tau_sigma."""

    values: Mapping[FaceVector, Number] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _freeze(self.values))

    def __getitem__(self, v: FaceVector) -> Number:
        return self.values.get(v, 0)

    def check(self, c: CellComplex) -> "OneForm":
        """Raise StructuralError unless every key is a vector of ``c``."""
        for v in self.values:
            if not c.has_vector(v):
                raise StructuralError(f"one-form is keyed by {v}, not a vector of the complex")
        return self

    def replace(self, v: FaceVector, value: Number) -> "OneForm":
        values: Dict[FaceVector, Number] = dict(self.values)
        values[v] = value
        return OneForm(values)

    @classmethod
    def constant(cls, c: CellComplex, value: Number) -> "OneForm":
        return cls({v: value for v in c.vectors()})

    @classmethod
    def random(cls, c: CellComplex, rng: np.random.Generator) -> "OneForm":
        vectors = c.vectors()
        return cls(dict(zip(vectors, rng.standard_normal(len(vectors)).tolist())))


@dataclass(frozen=True)
class TwoForm:
    """
    Raw coefficients eta(tau, rho) of a degree -2 map, dim tau = dim rho + 2.

    Only used to assemble the Laplacian on 1-forms.
    """

    values: Mapping[Tuple[str, str], Number] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _freeze(self.values))

    def __getitem__(self, key: Tuple[str, str]) -> Number:
        return self.values.get(key, 0)


__all__ = ["ZeroForm", "OneForm", "TwoForm"]
