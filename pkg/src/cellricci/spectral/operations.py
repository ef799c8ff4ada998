"""
The non-normalized Laplacian of G_M and the curvature bounds on its spectrum.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from cellricci.complex.models import CellComplex
from cellricci.complex.validation import connected_components, diameter
from cellricci.config import settings
from cellricci.curvature.forman import certify_quasiconvex
from cellricci.curvature.lly import global_lower_bound
from cellricci.exceptions import SpectralError
from cellricci.forms.models import ZeroForm
from cellricci.spectral.eigen import eigenvalues, first_nonzero
from cellricci.utils.rationals import format_decimal, format_rational


@dataclass(frozen=True)
class LaplacianMatrix:
    """L = D - A of G_M with rows in canonical cell order."""

    cell_ids: Tuple[str, ...]
    matrix: np.ndarray

    def apply(self, f: ZeroForm) -> ZeroForm:
        values = self.matrix @ np.array([float(f[cid]) for cid in self.cell_ids])
        return ZeroForm(dict(zip(self.cell_ids, values.tolist())))

    def degrees(self) -> Dict[str, int]:
        return {cid: int(d) for cid, d in zip(self.cell_ids, np.diag(self.matrix))}


def laplacian_matrix(c: CellComplex) -> LaplacianMatrix:
    """Integer matrix D - A of the face-incidence graph."""
    order = list(c.cell_ids())
    adjacency = nx.to_numpy_array(c.graph(), nodelist=order, dtype=np.int64)
    matrix = np.diag(adjacency.sum(axis=1)) - adjacency
    return LaplacianMatrix(cell_ids=tuple(order), matrix=matrix)


class SpectrumReport(BaseModel):
    """Spectrum of G_M with the Myers and eigenvalue bounds."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: List[float]
    zero_multiplicity: int
    components: int
    lambda1: Optional[float] = None
    diameter: Optional[int] = None
    d_max: int
    d_min: int
    kappa_min: Optional[Fraction] = None
    myers_bound: Optional[Fraction] = None
    lambda1_bound: Optional[Fraction] = None
    myers_ok: Optional[bool] = None
    lambda1_ok: Optional[bool] = None
    note: Optional[str] = None

    @property
    def applicable(self) -> bool:
        return self.lambda1_bound is not None

    @property
    def passed(self) -> bool:
        return self.myers_ok is not False and self.lambda1_ok is not False

    def to_lines(self) -> List[str]:
        lines = [f"eigenvalue\t{format_decimal(x)}" for x in self.eigenvalues]
        lines.append(f"zero_multiplicity\t{self.zero_multiplicity}")
        lines.append(
            f"lambda1\t{'n/a' if self.lambda1 is None else format_decimal(self.lambda1)}"
        )
        lines.append(
            f"kappa_min\t{'n/a' if self.kappa_min is None else format_rational(self.kappa_min)}"
        )
        lines.append(f"diameter\t{'n/a' if self.diameter is None else self.diameter}")
        if self.applicable:
            lines.append(
                f"myers\t{self.diameter} <= {format_rational(self.myers_bound)}\t"
                f"{'PASS' if self.myers_ok else 'FAIL'}"
            )
            lines.append(
                f"lambda1_bound\t{format_decimal(self.lambda1)} >= "
                f"{format_rational(self.lambda1_bound)}\t"
                f"{'PASS' if self.lambda1_ok else 'FAIL'}"
            )
        else:
            lines.append(f"bounds\tnot applicable: {self.note}")
        return lines


def lambda1_lower_bound(kappa: Fraction, d_max: int, d_min: int) -> Fraction:
    """d_max d_min kappa^2 / (kappa d_max + 2 (d_max - d_min))."""
    return d_max * d_min * kappa**2 / (kappa * d_max + 2 * (d_max - d_min))


def eigen_bound(c: CellComplex, eps: Optional[float] = None) -> SpectrumReport:
    """
    Spectrum of G_M checked against diam <= 2/kappa and the lambda1 bound.

    Bounds are skipped (not failed) when kappa_min <= 0 or G_M is disconnected.
    """
    eps = settings.spectral_eps if eps is None else eps
    if len(c) == 0:
        raise SpectralError("the empty complex has no spectrum")
    certify_quasiconvex(c)

    lap = laplacian_matrix(c)
    spectrum = eigenvalues(lap.matrix)
    components = len(connected_components(c))
    zeros = sum(1 for x in spectrum if abs(x) < eps)
    degrees = list(lap.degrees().values())
    base = dict(
        eigenvalues=spectrum,
        zero_multiplicity=zeros,
        components=components,
        d_max=max(degrees),
        d_min=min(degrees),
    )
    if zeros != components:
        logger.error(f"{zeros} zero eigenvalues but {components} components")
        raise SpectralError(
            f"zero multiplicity {zeros} does not match {components} components of G_M"
        )
    lambda1 = first_nonzero(spectrum, components, eps) if len(spectrum) > components else None

    if components > 1:
        return SpectrumReport(**base, lambda1=lambda1, note="G_M is disconnected")
    if not c.vectors():
        return SpectrumReport(**base, lambda1=lambda1, note="complex has no vectors")

    kappa = global_lower_bound(c)
    diam = diameter(c)
    if kappa <= 0:
        logger.info(f"kappa_min = {kappa}: spectral bounds not applicable")
        return SpectrumReport(
            **base,
            lambda1=lambda1,
            diameter=diam,
            kappa_min=kappa,
            note=f"kappa_min = {format_rational(kappa)} is not positive",
        )

    myers = 2 / kappa
    bound = lambda1_lower_bound(kappa, base["d_max"], base["d_min"])
    report = SpectrumReport(
        **base,
        lambda1=lambda1,
        diameter=diam,
        kappa_min=kappa,
        myers_bound=myers,
        lambda1_bound=bound,
        myers_ok=diam <= myers,
        lambda1_ok=lambda1 is not None and lambda1 >= float(bound) - eps,
    )
    if not report.passed:
        logger.error(f"Spectral bound violated: {report.to_lines()[-2:]}")
    return report


__all__ = [
    "LaplacianMatrix",
    "laplacian_matrix",
    "SpectrumReport",
    "lambda1_lower_bound",
    "eigen_bound",
]
