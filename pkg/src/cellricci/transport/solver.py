"""
Integer transportation solver.

Solves min sum x_st c_st subject to row sums = supply and column sums =
demand with networkx's network simplex on integer data, then reads dual
prices off the final residual graph with Bellman-Ford so every solution
ships with an optimality certificate.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Tuple

import networkx as nx
from loguru import logger

from cellricci.exceptions import TransportError

_ROOT = ("root", "")


@dataclass(frozen=True)
class FlowSolution:
    """Integer optimum of a transportation problem with its dual prices."""

    flow: Dict[Tuple[str, str], int]
    source_prices: Dict[str, int]
    target_prices: Dict[str, int]
    cost: int

    def dual_value(self, supply: Mapping[str, int], demand: Mapping[str, int]) -> int:
        return sum(self.source_prices[s] * q for s, q in supply.items()) + sum(
            self.target_prices[t] * q for t, q in demand.items()
        )


def solve_transportation(
    supply: Mapping[str, int],
    demand: Mapping[str, int],
    cost: Callable[[str, str], int],
) -> FlowSolution:
    """
    Solve a balanced transportation problem exactly.

    Args:
        supply: Positive integer supplies keyed by source
        demand: Positive integer demands keyed by target
        cost: Integer arc cost between a source and a target

    Returns:
        FlowSolution with u_s + v_t <= cost(s, t), equality on used arcs

    Raises:
        TransportError: unbalanced totals or an infeasible instance
    """
    if sum(supply.values()) != sum(demand.values()):
        raise TransportError("supply and demand totals differ")

    network = nx.DiGraph()
    for s, q in supply.items():
        network.add_node(("s", s), demand=-q)
    for t, q in demand.items():
        network.add_node(("t", t), demand=q)
    costs: Dict[Tuple[str, str], int] = {}
    for s in supply:
        for t in demand:
            costs[(s, t)] = cost(s, t)
            network.add_edge(("s", s), ("t", t), weight=costs[(s, t)])

    try:
        total, flow_dict = nx.network_simplex(network)
    except nx.NetworkXUnfeasible as e:
        raise TransportError(f"transportation problem is infeasible: {e}") from e

    flow: Dict[Tuple[str, str], int] = {}
    for (_, s), targets in flow_dict.items():
        for (_, t), amount in targets.items():
            if amount:
                flow[(s, t)] = amount

    # residual graph: forward arcs are uncapacitated, used arcs can be undone
    residual = nx.DiGraph()
    residual.add_nodes_from(network.nodes)
    for (s, t), c in costs.items():
        residual.add_edge(("s", s), ("t", t), weight=c)
        if (s, t) in flow:
            residual.add_edge(("t", t), ("s", s), weight=-c)
    residual.add_edges_from(((_ROOT, node) for node in network.nodes), weight=0)
    try:
        dist = nx.single_source_bellman_ford_path_length(residual, _ROOT)
    except nx.NetworkXUnbounded as e:
        raise TransportError("residual graph has a negative cycle") from e

    solution = FlowSolution(
        flow=flow,
        source_prices={s: -dist[("s", s)] for s in supply},
        target_prices={t: dist[("t", t)] for t in demand},
        cost=total,
    )
    logger.debug(
        f"Transportation {len(supply)}x{len(demand)} solved with cost {total}"
    )
    return solution


__all__ = ["FlowSolution", "solve_transportation"]
