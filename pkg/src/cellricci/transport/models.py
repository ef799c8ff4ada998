"""
Transport models: measures, couplings and certificates.

All masses are exact Fractions.
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from cellricci.complex.models import FaceVector
from cellricci.utils.rationals import format_rational


class Measure(BaseModel):
    """Probability measure on cells; zero masses are dropped."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mass: Dict[str, Fraction]

    @field_validator("mass", mode="before")
    @classmethod
    def validate_mass(cls, v: Dict[str, Fraction]) -> Dict[str, Fraction]:
        """Ensure masses are non-negative and sum to 1."""
        cleaned = {k: Fraction(m) for k, m in v.items() if m != 0}
        if any(m < 0 for m in cleaned.values()):
            raise ValueError("masses must be non-negative")
        if sum(cleaned.values(), Fraction(0)) != 1:
            raise ValueError("total mass must be 1")
        return cleaned

    def __getitem__(self, cell_id: str) -> Fraction:
        return self.mass.get(cell_id, Fraction(0))

    @property
    def support(self) -> List[str]:
        return list(self.mass)

    def lcm_denominator(self) -> int:
        return math.lcm(*(m.denominator for m in self.mass.values()))


class Coupling(BaseModel):
    """Joint mass assignment whose marginals reproduce ``source`` and ``target``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    flow: Dict[Tuple[str, str], Fraction]
    source: Measure
    target: Measure

    @model_validator(mode="after")
    def check_marginals(self) -> "Coupling":
        rows: Dict[str, Fraction] = {}
        cols: Dict[str, Fraction] = {}
        for (x, y), m in self.flow.items():
            if m < 0:
                raise ValueError(f"negative flow {m} on {x}->{y}")
            rows[x] = rows.get(x, Fraction(0)) + m
            cols[y] = cols.get(y, Fraction(0)) + m
        rows = {k: m for k, m in rows.items() if m != 0}
        cols = {k: m for k, m in cols.items() if m != 0}
        if rows != self.source.mass:
            raise ValueError("row sums do not reproduce the source measure")
        if cols != self.target.mass:
            raise ValueError("column sums do not reproduce the target measure")
        return self

    def rows(self) -> List[Tuple[str, str, Fraction]]:
        """Non-zero entries sorted by (source, target)."""
        return [(x, y, m) for (x, y), m in sorted(self.flow.items()) if m != 0]


class TransportCertificate(BaseModel):
    """Optimal value with a primal coupling and a 1-Lipschitz dual potential."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction
    coupling: Coupling
    potential: Dict[str, Fraction]
    primal_cost: Fraction
    dual_value: Fraction

    @model_validator(mode="after")
    def check_strong_duality(self) -> "TransportCertificate":
        if not self.primal_cost == self.dual_value == self.value:
            raise ValueError(
                f"primal {self.primal_cost} and dual {self.dual_value} disagree"
            )
        return self

    def to_dict(self) -> Dict:
        return {
            "value": format_rational(self.value),
            "coupling": [
                [x, y, m.numerator, m.denominator] for x, y, m in self.coupling.rows()
            ],
        }


class SandwichRecord(BaseModel):
    """dual witness value <= W <= explicit coupling cost, at one alpha."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vector: FaceVector
    alpha: Fraction
    minimal_alpha: Fraction
    dual_value: Fraction
    wasserstein: Fraction
    coupling_cost: Fraction
    formula_cost: Fraction
    lipschitz_violations: int = 0
    note: Optional[str] = None

    @property
    def ordered(self) -> bool:
        return self.dual_value <= self.wasserstein <= self.coupling_cost

    @property
    def tight(self) -> bool:
        return (
            self.dual_value == self.wasserstein == self.coupling_cost == self.formula_cost
        )

    def to_row(self) -> List[str]:
        return [
            self.vector.tau,
            self.vector.sigma,
            format_rational(self.alpha),
            format_rational(self.dual_value),
            format_rational(self.wasserstein),
            format_rational(self.coupling_cost),
            "yes" if self.tight else "no",
        ]


__all__ = ["Measure", "Coupling", "TransportCertificate", "SandwichRecord"]
