"""
alpha-Ricci and LLY curvature of G_M, and the comparison with Ric.

kappa_alpha(a, b) = 1 - W(m^alpha_a, m^alpha_b) / d(a, b) and the LLY
curvature is the limit of kappa_alpha / (1 - alpha) as alpha -> 1. For a
vector the ratio is constant once alpha >= 1 / (D + 1), D the larger degree,
so agreement of two exact evaluations near 1 fixes the limit.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Iterable, List, Optional, Tuple

from loguru import logger

from cellricci.complex.models import CellComplex, FaceVector
from cellricci.config import settings
from cellricci.curvature.forman import certify_quasiconvex, counting_check
from cellricci.curvature.models import LLYRecord
from cellricci.exceptions import (
    InvalidParameterError,
    LimitNotStabilizedError,
    StructuralError,
    TransportError,
)
from cellricci.transport.operations import (
    UNREACHABLE,
    graph_distance,
    measure_alpha,
    wasserstein,
)
from cellricci.utils.rationals import check_alpha

Sample = Tuple[Fraction, Fraction]


def alpha_ricci(c: CellComplex, a: str, b: str, alpha: Fraction) -> Fraction:
    """
    kappa_alpha(a, b), exact.

    Raises:
        ComplexValidationError: the complex fails certification
        InvalidParameterError: a == b or alpha outside [0, 1)
        TransportError: a and b in different components
    """
    certify_quasiconvex(c)
    alpha = Fraction(alpha)
    check_alpha(alpha, allow_one=False)
    if a == b:
        raise InvalidParameterError("alpha-Ricci curvature needs two distinct cells")
    distance = graph_distance(c, a, b)
    if distance == UNREACHABLE:
        raise TransportError(f"{a} and {b} lie in different components")

    mu, nu = measure_alpha(c, a, alpha), measure_alpha(c, b, alpha)
    return 1 - wasserstein(c, mu, nu).value / distance


def _limit(
    c: CellComplex, v: FaceVector, max_iterations: int
) -> Tuple[Fraction, Fraction, List[Sample]]:
    c.require_vector(v)
    d_max = max(c.degree(v.tau), c.degree(v.sigma))
    samples: List[Sample] = []

    def h(alpha: Fraction) -> Fraction:
        kappa = alpha_ricci(c, v.tau, v.sigma, alpha)
        samples.append((alpha, kappa))
        return kappa / (1 - alpha)

    prev_alpha = Fraction(d_max, d_max + 1)
    alpha = Fraction(2 * d_max, 2 * d_max + 1)
    prev_h, cur_h = h(prev_alpha), h(alpha)
    iterations = 0
    while prev_h != cur_h:
        iterations += 1
        if iterations > max_iterations:
            logger.error(f"kappa_alpha / (1 - alpha) still moving at {v}, alpha={alpha}")
            raise LimitNotStabilizedError(
                f"limit at {v} not stabilized after {max_iterations} refinements "
                f"(last values {prev_h}, {cur_h})"
            )
        alpha = 1 - (1 - alpha) / 2
        prev_h, cur_h = cur_h, h(alpha)
    return cur_h, alpha, samples


def lly_ricci(
    c: CellComplex, v: FaceVector, max_iterations: Optional[int] = None
) -> Fraction:
    """
    LLY curvature kappa(tau, sigma) of a vector.

    Raises:
        LimitNotStabilizedError: the refinement cap was hit
    """
    certify_quasiconvex(c)
    cap = settings.limit_max_iterations if max_iterations is None else max_iterations
    kappa, _, _ = _limit(c, v, cap)
    return kappa


def comparison_formula(c: CellComplex, v: FaceVector) -> Fraction:
    """Ric/d_max + 2(1/d_min - 1/d_max) + d_min/d_max - 1."""
    certify_quasiconvex(c)
    record = counting_check(c, v)
    d_max, d_min = Fraction(record.d_max), Fraction(record.d_min)
    return record.ric / d_max + 2 * (1 / d_min - 1 / d_max) + d_min / d_max - 1


def lly_record(c: CellComplex, v: FaceVector) -> LLYRecord:
    """LLY curvature of ``v`` next to the closed form."""
    formula = comparison_formula(c, v)
    kappa, alpha_used, samples = _limit(c, v, settings.limit_max_iterations)
    logger.debug(f"{v}: kappa={kappa} formula={formula}")
    return LLYRecord(
        vector=v,
        ric=counting_check(c, v).ric,
        kappa=kappa,
        formula_value=formula,
        alpha_used=alpha_used,
        kappa_alpha_samples=tuple(samples),
    )


def verify_theorem(c: CellComplex, jobs: Optional[int] = None) -> List[LLYRecord]:
    """
    LLY curvature against the closed form on every vector, in canonical order.

    Mismatches are returned in the records (``match`` is False), not raised.
    """
    certify_quasiconvex(c)
    jobs = settings.jobs if jobs is None else jobs
    vectors = list(c.vectors())

    if jobs > 1 and len(vectors) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(
                executor.map(
                    partial(lly_record, c),
                    vectors,
                    chunksize=max(1, len(vectors) // (4 * jobs)),
                )
            )
    else:
        records = [lly_record(c, v) for v in vectors]

    failed = mismatches(records)
    if failed:
        logger.warning(f"{len(failed)} of {len(records)} vectors disagree with the formula")
    else:
        logger.info(f"All {len(records)} vectors agree with the formula")
    return records


def mismatches(records: Iterable[LLYRecord]) -> List[LLYRecord]:
    return [r for r in records if not r.match]


def global_lower_bound(
    c: CellComplex, records: Optional[List[LLYRecord]] = None
) -> Fraction:
    """
    Minimum LLY curvature over all vectors.

    On a connected complex this also bounds kappa(a, b) from below for every
    pair of distinct cells.

    Raises:
        StructuralError: there are no vectors to take the minimum over
    """
    if records is None:
        certify_quasiconvex(c)
        kappas = [lly_ricci(c, v) for v in c.vectors()]
    else:
        kappas = [r.kappa for r in records]
    if not kappas:
        raise StructuralError("kappa_min is undefined on a complex without vectors")
    return min(kappas)


def kappa_alpha_profile(
    c: CellComplex, v: FaceVector, alphas: Optional[Iterable[Fraction]] = None
) -> List[Sample]:
    """(alpha, kappa_alpha) over a grid, by default 1/4, 1/2, 3/4, 7/8, D/(D+1)."""
    if alphas is None:
        d_max = max(c.degree(v.tau), c.degree(v.sigma))
        alphas = [
            Fraction(1, 4),
            Fraction(1, 2),
            Fraction(3, 4),
            Fraction(7, 8),
            Fraction(d_max, d_max + 1),
        ]
    return [(a, alpha_ricci(c, v.tau, v.sigma, a)) for a in sorted(set(alphas))]


__all__ = [
    "alpha_ricci",
    "lly_ricci",
    "comparison_formula",
    "lly_record",
    "verify_theorem",
    "mismatches",
    "global_lower_bound",
    "kappa_alpha_profile",
]
