"""Combinatorial and LLY Ricci curvature of face vectors."""

from cellricci.curvature.forman import (
    all_neighbor_sets,
    certify_quasiconvex,
    counting_check,
    degree,
    forman_records,
    neighbor_sets,
    ric,
)
from cellricci.curvature.lly import (
    alpha_ricci,
    comparison_formula,
    global_lower_bound,
    kappa_alpha_profile,
    lly_record,
    lly_ricci,
    mismatches,
    verify_theorem,
)
from cellricci.curvature.models import CurvatureRecord, LLYRecord, NeighborSets

__all__ = [
    "NeighborSets",
    "CurvatureRecord",
    "LLYRecord",
    "neighbor_sets",
    "all_neighbor_sets",
    "ric",
    "degree",
    "counting_check",
    "certify_quasiconvex",
    "forman_records",
    "alpha_ricci",
    "lly_ricci",
    "comparison_formula",
    "lly_record",
    "verify_theorem",
    "mismatches",
    "global_lower_bound",
    "kappa_alpha_profile",
]
