"""Exact optimal transport on the face-incidence graph."""

from cellricci.transport.certificates import (
    certificate_sandwich,
    comparison_cost,
    coupling_cost,
    minimal_feasible_alpha,
    paper_coupling,
    paper_dual_witness,
    witness_value,
)
from cellricci.transport.models import (
    Coupling,
    Measure,
    SandwichRecord,
    TransportCertificate,
)
from cellricci.transport.operations import (
    UNREACHABLE,
    graph_distance,
    measure_alpha,
    wasserstein,
)
from cellricci.transport.solver import FlowSolution, solve_transportation

__all__ = [
    "Measure",
    "Coupling",
    "TransportCertificate",
    "SandwichRecord",
    "FlowSolution",
    "solve_transportation",
    "UNREACHABLE",
    "measure_alpha",
    "graph_distance",
    "wasserstein",
    "paper_coupling",
    "coupling_cost",
    "minimal_feasible_alpha",
    "paper_dual_witness",
    "witness_value",
    "comparison_cost",
    "certificate_sandwich",
]
