"""
Structural validation of cell complexes.

Regularity is checked at poset level only: the boundary of a boundary
vanishes, every interval of length two is a diamond, and every cell of
positive dimension has at least two facets. Quasiconvexity is the closure
intersection condition between cofaces of a common cell.
"""

from itertools import combinations
from typing import Dict, FrozenSet, List

import networkx as nx
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from cellricci.complex.models import CellComplex
from cellricci.exceptions import ComplexValidationError, StructuralError

CHECKS = ("boundary_squared", "diamond", "quasiconvex", "min_facets")


class ValidationReport(BaseModel):
    """Outcome of the four structural checks."""

    model_config = ConfigDict(frozen=True)

    f_vector: List[int]
    boundary_squared: bool = Field(description="d(d(x)) = 0 for every cell")
    diamond: bool = Field(description="every (p+1)/(p-1) interval has two middles")
    quasiconvex: bool = Field(description="cofaces of a cell meet in its closure")
    min_facets: bool = Field(description="every p-cell with p >= 1 has >= 2 facets")
    violations: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failed_checks()

    def failed_checks(self) -> List[str]:
        return [name for name in CHECKS if not getattr(self, name)]

    def to_dict(self) -> Dict:
        return {**self.model_dump(), "passed": self.passed}


def _check_boundary_squared(c: CellComplex, out: List[str]) -> bool:
    ok = True
    for tau in c.cell_ids():
        if c.cell(tau).dim < 2:
            continue
        totals: Dict[str, int] = {}
        for sigma, s1 in c.boundary(tau).items():
            for rho, s2 in c.boundary(sigma).items():
                totals[rho] = totals.get(rho, 0) + s1 * s2
        for rho, total in totals.items():
            if total != 0:
                ok = False
                out.append(f"boundary_squared: coefficient {total} of {rho} in dd({tau})")
    return ok


def _check_diamond(c: CellComplex, out: List[str]) -> bool:
    ok = True
    for tau in c.cell_ids():
        faces = c.faces(tau)
        if c.cell(tau).dim == 1:
            # the empty cell sits below every vertex
            if len(faces) != 2:
                ok = False
                out.append(f"diamond: edge {tau} has {len(faces)} vertices, expected 2")
            continue
        middles: Dict[str, int] = {}
        for sigma in faces:
            for rho in c.faces(sigma):
                middles[rho] = middles.get(rho, 0) + 1
        for rho, count in middles.items():
            if count != 2:
                ok = False
                out.append(f"diamond: {count} cells between {tau} and {rho}, expected 2")
    return ok


def _check_quasiconvex(c: CellComplex, out: List[str]) -> bool:
    ok = True
    for sigma in c.cell_ids():
        expected = c.closure(sigma)
        for tau, tau2 in combinations(c.cofaces(sigma), 2):
            shared = c.closure(tau) & c.closure(tau2)
            if shared != expected:
                ok = False
                extra = sorted(shared - expected)
                out.append(
                    f"quasiconvex: {tau} and {tau2} share {sigma} but also {', '.join(extra)}"
                )
    return ok


def _check_min_facets(c: CellComplex, out: List[str]) -> bool:
    ok = True
    for cell in c:
        if cell.dim >= 1 and len(c.faces(cell.id)) < 2:
            ok = False
            out.append(f"min_facets: {cell.id} has {len(c.faces(cell.id))} facets")
    return ok


def validate(c: CellComplex) -> ValidationReport:
    """Run every structural check; never raises on a well-formed poset."""
    violations: List[str] = []
    warnings = [f"isolated cell {cid}" for cid in c.cell_ids() if c.is_isolated(cid)]
    if len(c) == 0:
        warnings.append("complex is empty")

    report = ValidationReport(
        f_vector=list(c.f_vector()),
        boundary_squared=_check_boundary_squared(c, violations),
        diamond=_check_diamond(c, violations),
        quasiconvex=_check_quasiconvex(c, violations),
        min_facets=_check_min_facets(c, violations),
        violations=violations,
        warnings=warnings,
    )
    if report.passed:
        logger.debug(f"Complex {c.f_vector()} passed validation")
    else:
        logger.warning(f"Complex {c.f_vector()} failed: {report.failed_checks()}")
    return report


def require_valid(c: CellComplex) -> ValidationReport:
    """Validate and raise ComplexValidationError on any failed check."""
    report = validate(c)
    if not report.passed:
        raise ComplexValidationError(
            f"complex failed {', '.join(report.failed_checks())}: {report.violations[0]}",
            report=report,
        )
    return report


# ============================================================================
# Graph view
# ============================================================================


def is_bipartite_by_dimension(c: CellComplex) -> bool:
    """True when colouring cells by dimension parity is a proper 2-colouring of G_M."""
    graph = c.graph()
    parity_ok = all(
        graph.nodes[a]["dim"] % 2 != graph.nodes[b]["dim"] % 2 for a, b in graph.edges
    )
    return parity_ok and nx.is_bipartite(graph)


def connected_components(c: CellComplex) -> List[FrozenSet[str]]:
    """Components of G_M ordered by their first cell in canonical order."""
    order = {cid: i for i, cid in enumerate(c.cell_ids())}
    components = [frozenset(comp) for comp in nx.connected_components(c.graph())]
    return sorted(components, key=lambda comp: min(order[cid] for cid in comp))


def diameter(c: CellComplex) -> int:
    """Hop diameter of G_M; only defined for a connected non-empty complex."""
    if len(c) == 0 or not nx.is_connected(c.graph()):
        raise StructuralError("diameter is undefined for a disconnected complex")
    return max(max(c.distances_from(cid).values()) for cid in c.cell_ids())


__all__ = [
    "ValidationReport",
    "validate",
    "require_valid",
    "is_bipartite_by_dimension",
    "connected_components",
    "diameter",
]
