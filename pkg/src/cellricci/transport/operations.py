"""
Lazy random-walk measures and exact Wasserstein distances on G_M.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

from loguru import logger

from cellricci.complex.models import CellComplex
from cellricci.exceptions import TransportError, UndefinedMeasureError
from cellricci.transport.models import Coupling, Measure, TransportCertificate
from cellricci.transport.solver import solve_transportation
from cellricci.utils.rationals import check_alpha

UNREACHABLE = math.inf


def measure_alpha(c: CellComplex, sigma: str, alpha: Fraction) -> Measure:
    """
    m^alpha_sigma: alpha at sigma, (1 - alpha) / d_sigma at each face and coface.

    Raises:
        UndefinedMeasureError: sigma has degree 0
        InvalidParameterError: alpha outside [0, 1]
    """
    alpha = Fraction(alpha)
    check_alpha(alpha)
    d_sigma = c.degree(sigma)
    if d_sigma == 0:
        raise UndefinedMeasureError(f"m^alpha is undefined at isolated cell {sigma}")

    share = (1 - alpha) / d_sigma
    mass: Dict[str, Fraction] = {sigma: alpha}
    for neighbor in c.neighbors(sigma):
        mass[neighbor] = share
    return Measure(mass=mass)


def graph_distance(c: CellComplex, a: str, b: str) -> Union[int, float]:
    """Hop distance in G_M; ``UNREACHABLE`` (inf) across components."""
    distance = c.distance(a, b)
    return UNREACHABLE if distance is None else distance


def kantorovich_potential(
    c: CellComplex, target_prices: Mapping[str, Fraction], cells: Iterable[str]
) -> Dict[str, Fraction]:
    """phi(x) = min_t d(x, t) - v_t; 1-Lipschitz on G_M."""
    potential: Dict[str, Fraction] = {}
    for x in cells:
        dist = c.distances_from(x)
        potential[x] = min(dist[t] - v for t, v in target_prices.items())
    return potential


def wasserstein(c: CellComplex, mu: Measure, nu: Measure) -> TransportCertificate:
    """
    Exact W_1(mu, nu) with graph-distance costs.

    Masses are scaled to integers by the common denominator, solved exactly,
    and scaled back. The dual prices are turned into a Kantorovich potential
    over the component of the supports.

    Raises:
        TransportError: supports in different components
    """
    for a in mu.support:
        for b in nu.support:
            if graph_distance(c, a, b) == UNREACHABLE:
                raise TransportError(f"{a} and {b} lie in different components")

    scale = math.lcm(mu.lcm_denominator(), nu.lcm_denominator())
    supply = {x: int(m * scale) for x, m in mu.mass.items()}
    demand = {y: int(m * scale) for y, m in nu.mass.items()}
    solution = solve_transportation(supply, demand, lambda s, t: c.distance(s, t))

    flow = {key: Fraction(q, scale) for key, q in solution.flow.items()}
    primal = Fraction(solution.cost, scale)

    prices = {t: Fraction(v, 1) for t, v in solution.target_prices.items()}
    component = c.distances_from(mu.support[0]).keys()
    potential = kantorovich_potential(c, prices, component)
    dual = sum(
        (potential[x] * (mu[x] - nu[x]) for x in set(mu.support) | set(nu.support)),
        Fraction(0),
    )
    if solution.dual_value(supply, demand) != solution.cost:
        raise TransportError("transportation prices do not certify the flow")

    logger.debug(f"W = {primal} over supports {len(mu.support)}x{len(nu.support)}")
    return TransportCertificate(
        value=primal,
        coupling=Coupling(flow=flow, source=mu, target=nu),
        potential=potential,
        primal_cost=primal,
        dual_value=dual,
    )


__all__ = [
    "UNREACHABLE",
    "measure_alpha",
    "graph_distance",
    "kantorovich_potential",
    "wasserstein",
]
