"""
Neighbor vectors and the combinatorial Ricci curvature Ric = 2 - #N0.

For a vector v = (tau > sigma):

* 0-neighbors are (tau' > sigma) with no common coface of tau and tau', and
  (tau > sigma') with no common face of sigma and sigma'. On the bottom
  level (sigma a vertex) the face condition is vacuous.
* 2-neighbors are (mu > tau') with mu > tau, tau' > sigma, and
  (sigma' > rho) with tau > sigma', rho < sigma.
"""

from functools import lru_cache
from types import MappingProxyType
from typing import List, Mapping, Set

from loguru import logger

from cellricci.complex.models import CellComplex, FaceVector
from cellricci.complex.validation import ValidationReport, require_valid
from cellricci.curvature.models import CurvatureRecord, NeighborSets
from cellricci.exceptions import StructuralError


def _compute_neighbor_sets(c: CellComplex, v: FaceVector) -> NeighborSets:
    tau, sigma = v.tau, v.sigma
    zero_tau: Set[FaceVector] = set()
    zero_sigma: Set[FaceVector] = set()
    two: Set[FaceVector] = set()

    tau_cofaces = set(c.cofaces(tau))
    for other in c.cofaces(sigma):
        if other != tau and not tau_cofaces & set(c.cofaces(other)):
            zero_sigma.add(FaceVector(other, sigma))

    sigma_faces = set(c.faces(sigma))
    for other in c.faces(tau):
        if other != sigma and not sigma_faces & set(c.faces(other)):
            zero_tau.add(FaceVector(tau, other))

    for mu in c.cofaces(tau):
        for other in c.faces(mu):
            if other != tau and sigma in c.faces(other):
                two.add(FaceVector(mu, other))

    tau_faces = set(c.faces(tau))
    for rho in c.faces(sigma):
        for other in c.cofaces(rho):
            if other != sigma and other in tau_faces:
                two.add(FaceVector(other, rho))

    return NeighborSets(
        vector=v,
        zero=tuple(sorted(zero_tau | zero_sigma, key=c.vector_key)),
        two=tuple(sorted(two, key=c.vector_key)),
        n_tau=len(zero_tau),
        n_sigma=len(zero_sigma),
    )


@lru_cache(maxsize=32)
def all_neighbor_sets(c: CellComplex) -> Mapping[FaceVector, NeighborSets]:
    """Neighbor sets of every vector, cached per complex."""
    table = {v: _compute_neighbor_sets(c, v) for v in c.vectors()}
    logger.debug(f"Enumerated neighbor sets for {len(table)} vectors")
    return MappingProxyType(table)


def _lookup(c: CellComplex, v: FaceVector) -> NeighborSets:
    c.require_vector(v)
    return all_neighbor_sets(c)[v]


def neighbor_sets(c: CellComplex, v: FaceVector) -> NeighborSets:
    """N0 and N2 of ``v`` on a certified complex."""
    certify_quasiconvex(c)
    return _lookup(c, v)


def ric(c: CellComplex, v: FaceVector) -> int:
    """Ric(tau > sigma) = 2 - #N0."""
    return 2 - len(neighbor_sets(c, v).zero)


def degree(c: CellComplex, cell_id: str) -> int:
    """d_sigma: number of faces plus cofaces."""
    return c.degree(cell_id)


def counting_check(c: CellComplex, v: FaceVector) -> CurvatureRecord:
    """
    Check d_tau - n_tau - 1 = d_sigma - n_sigma - 1 = #N2 for one vector.

    Raises:
        StructuralError: if either equality fails
    """
    ns = _lookup(c, v)
    d_tau, d_sigma = c.degree(v.tau), c.degree(v.sigma)
    lhs, mid = d_tau - ns.n_tau - 1, d_sigma - ns.n_sigma - 1
    if not lhs == mid == ns.n2:
        logger.error(
            f"Counting identity fails at {v}: {lhs} / {mid} / #N2={ns.n2}"
        )
        raise StructuralError(
            f"counting identity fails at {v}: d_tau-n_tau-1={lhs}, "
            f"d_sigma-n_sigma-1={mid}, #N2={ns.n2}"
        )
    return CurvatureRecord(
        vector=v,
        ric=2 - len(ns.zero),
        d_tau=d_tau,
        d_sigma=d_sigma,
        n_tau=ns.n_tau,
        n_sigma=ns.n_sigma,
        n2=ns.n2,
    )


@lru_cache(maxsize=32)
def certify_quasiconvex(c: CellComplex) -> ValidationReport:
    """
    Gate for every curvature computation: structural validation plus the
    counting identity on every vector.

    Raises:
        ComplexValidationError: a structural check failed
        StructuralError: the counting identity failed somewhere
    """
    report = require_valid(c)
    for v in c.vectors():
        counting_check(c, v)
    logger.info(f"Complex {c.f_vector()} certified for curvature computation")
    return report


def forman_records(c: CellComplex) -> List[CurvatureRecord]:
    """Curvature records of every vector in canonical order."""
    certify_quasiconvex(c)
    return [counting_check(c, v) for v in c.vectors()]


__all__ = [
    "neighbor_sets",
    "all_neighbor_sets",
    "ric",
    "degree",
    "counting_check",
    "certify_quasiconvex",
    "forman_records",
]
