"""
Curvature records.

Pydantic models carrying the per-vector outputs of the combinatorial and
LLY curvature computations.
"""

from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from cellricci.complex.models import FaceVector
from cellricci.utils.rationals import format_rational


class NeighborSets(BaseModel):
    """0- and 2-neighbor vectors of a base vector (tau > sigma)."""

    model_config = ConfigDict(frozen=True)

    vector: FaceVector
    zero: Tuple[FaceVector, ...]
    two: Tuple[FaceVector, ...]
    n_tau: int
    n_sigma: int

    @model_validator(mode="after")
    def check_partition(self) -> "NeighborSets":
        if self.n_tau + self.n_sigma != len(self.zero):
            raise ValueError("n_tau + n_sigma must equal the number of 0-neighbors")
        if set(self.zero) & set(self.two):
            raise ValueError("a vector cannot be both a 0- and a 2-neighbor")
        if self.vector in self.zero or self.vector in self.two:
            raise ValueError("the base vector is not its own neighbor")
        return self

    @property
    def n2(self) -> int:
        return len(self.two)


class CurvatureRecord(BaseModel):
    """Combinatorial Ricci curvature of one vector with its degree data."""

    model_config = ConfigDict(frozen=True)

    vector: FaceVector
    ric: int
    d_tau: int
    d_sigma: int
    n_tau: int
    n_sigma: int
    n2: int

    @model_validator(mode="after")
    def check_counting(self) -> "CurvatureRecord":
        if self.ric != 2 - (self.n_tau + self.n_sigma):
            raise ValueError("ric must equal 2 - (n_tau + n_sigma)")
        if not (self.d_tau - self.n_tau - 1 == self.d_sigma - self.n_sigma - 1 == self.n2):
            raise ValueError("degree counts do not satisfy the counting identity")
        return self

    @property
    def d_max(self) -> int:
        return max(self.d_tau, self.d_sigma)

    @property
    def d_min(self) -> int:
        return min(self.d_tau, self.d_sigma)

    def to_row(self) -> List[str]:
        return [
            self.vector.tau,
            self.vector.sigma,
            str(self.ric),
            str(self.d_tau),
            str(self.d_sigma),
            str(self.n_tau),
            str(self.n_sigma),
            str(self.n2),
        ]


class LLYRecord(BaseModel):
    """LLY curvature of one vector next to the closed-form prediction."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vector: FaceVector
    ric: int
    kappa: Fraction
    formula_value: Fraction
    alpha_used: Fraction
    kappa_alpha_samples: Tuple[Tuple[Fraction, Fraction], ...] = ()

    @property
    def match(self) -> bool:
        return self.kappa == self.formula_value

    def h_samples(self) -> List[Tuple[Fraction, Fraction]]:
        """(alpha, kappa_alpha / (1 - alpha)) for every sample with alpha < 1."""
        return [(a, k / (1 - a)) for a, k in self.kappa_alpha_samples if a < 1]

    def to_row(self) -> List[str]:
        return [
            self.vector.tau,
            self.vector.sigma,
            str(self.ric),
            format_rational(self.formula_value),
            format_rational(self.kappa),
            "yes" if self.match else "no",
        ]

    def to_dict(self) -> Dict:
        return {
            "vector": str(self.vector),
            "ric": self.ric,
            "kappa": format_rational(self.kappa),
            "formula": format_rational(self.formula_value),
            "match": self.match,
        }


__all__ = ["NeighborSets", "CurvatureRecord", "LLYRecord"]
