"""
Explicit transport certificates for a vector (tau > sigma).

The neighborhood of a vector splits into roles:

    mu      cofaces of tau            tau1  the other middle cell of mu > . > sigma
    sigma1  faces of tau meeting sigma  rho  their common face with sigma
    sigma2  faces of tau with no common face with sigma   (0-neighbors via tau)
    tau2    cofaces of sigma with no common coface with tau (0-neighbors via sigma)

An explicit coupling between m^alpha_tau and m^alpha_sigma gives an upper
bound on W and an integer 1-Lipschitz function gives a lower bound; both
meet the closed-form comparison cost on quasiconvex complexes.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from loguru import logger
from pydantic import ValidationError

from cellricci.complex.models import CellComplex, FaceVector
from cellricci.config import settings
from cellricci.curvature.forman import certify_quasiconvex, counting_check, neighbor_sets
from cellricci.exceptions import CouplingFeasibilityError, StructuralError, TransportError
from cellricci.transport.models import Coupling, Measure, SandwichRecord
from cellricci.transport.operations import measure_alpha, wasserstein
from cellricci.utils.rationals import check_alpha


class Affine(NamedTuple):
    """const + slope * alpha."""

    const: Fraction
    slope: Fraction

    def __call__(self, alpha: Fraction) -> Fraction:
        return self.const + self.slope * alpha

    def __add__(self, other: "Affine") -> "Affine":  # type: ignore[override]
        return Affine(self.const + other.const, self.slope + other.slope)

    def __sub__(self, other: "Affine") -> "Affine":
        return Affine(self.const - other.const, self.slope - other.slope)

    def __truediv__(self, k: int) -> "Affine":
        return Affine(self.const / k, self.slope / k)


ZERO = Affine(Fraction(0), Fraction(0))
ALPHA = Affine(Fraction(0), Fraction(1))


def _share(degree: int) -> Affine:
    """(1 - alpha) / degree."""
    return Affine(Fraction(1, degree), Fraction(-1, degree))


@dataclass(frozen=True)
class Roles:
    tau: str
    sigma: str
    mu_tau1: Tuple[Tuple[str, str], ...]
    sigma1_rho: Tuple[Tuple[str, str], ...]
    sigma2: Tuple[str, ...]
    tau2: Tuple[str, ...]


def vector_roles(c: CellComplex, v: FaceVector) -> Roles:
    ns = neighbor_sets(c, v)
    tau_cofaces = set(c.cofaces(v.tau))
    return Roles(
        tau=v.tau,
        sigma=v.sigma,
        mu_tau1=tuple((u.tau, u.sigma) for u in ns.two if u.tau in tau_cofaces),
        sigma1_rho=tuple((u.tau, u.sigma) for u in ns.two if u.tau not in tau_cofaces),
        sigma2=tuple(u.sigma for u in ns.zero if u.tau == v.tau),
        tau2=tuple(u.tau for u in ns.zero if u.tau != v.tau),
    )


# ============================================================================
# Explicit coupling
# ============================================================================


CouplingEntry = Tuple[str, str, str, Affine]


def coupling_entries(c: CellComplex, v: FaceVector) -> List[CouplingEntry]:
    """
    Symbolic coupling table (label, source, target, mass as a function of alpha).

    Table A is used when d_sigma >= d_tau, table A' otherwise. When the
    0-neighbors on the low-degree side are missing, tau and sigma each keep
    a stay mass of (1 - alpha) / max degree.
    """
    r = vector_roles(c, v)
    d_tau, d_sigma = c.degree(r.tau), c.degree(r.sigma)
    n_tau, n_sigma = len(r.sigma2), len(r.tau2)
    a, b = _share(d_tau), _share(d_sigma)
    rows: List[CouplingEntry] = []

    if d_sigma >= d_tau:
        stay = b if n_tau == 0 else ZERO
        rows.append(("A(tau,sigma)", r.tau, r.sigma, ALPHA - stay))
        if n_tau == 0:
            rows.append(("A(tau,tau)", r.tau, r.tau, stay))
            rows.append(("A(sigma,sigma)", r.sigma, r.sigma, stay))
        for t2 in r.tau2:
            rows.append(("A(sigma,tau2)", r.sigma, t2, (a - stay) / n_sigma))
        for s2 in r.sigma2:
            rows.append(("A(sigma2,tau)", s2, r.tau, b / n_tau))
        for mu, t1 in r.mu_tau1:
            rows.append(("A(mu,tau1)", mu, t1, b))
            for t2 in r.tau2:
                rows.append(("A(mu,tau2)", mu, t2, (a - b) / n_sigma))
        for s1, rho in r.sigma1_rho:
            rows.append(("A(sigma1,rho)", s1, rho, b))
            for t2 in r.tau2:
                rows.append(("A(sigma1,tau2)", s1, t2, (a - b) / n_sigma))
        for s2 in r.sigma2:
            for t2 in r.tau2:
                rows.append(("A(sigma2,tau2)", s2, t2, (a - b / n_tau) / n_sigma))
    else:
        stay = a if n_sigma == 0 else ZERO
        rows.append(("A'(tau,sigma)", r.tau, r.sigma, ALPHA - stay))
        if n_sigma == 0:
            rows.append(("A'(tau,tau)", r.tau, r.tau, stay))
            rows.append(("A'(sigma,sigma)", r.sigma, r.sigma, stay))
        for s2 in r.sigma2:
            rows.append(("A'(sigma2,tau)", s2, r.tau, (b - stay) / n_tau))
        for t2 in r.tau2:
            rows.append(("A'(sigma,tau2)", r.sigma, t2, a / n_sigma))
        for mu, t1 in r.mu_tau1:
            rows.append(("A'(mu,tau1)", mu, t1, a))
            for s2 in r.sigma2:
                rows.append(("A'(sigma2,tau1)", s2, t1, (b - a) / n_tau))
        for s1, rho in r.sigma1_rho:
            rows.append(("A'(sigma1,rho)", s1, rho, a))
            for s2 in r.sigma2:
                rows.append(("A'(sigma2,rho)", s2, rho, (b - a) / n_tau))
        for s2 in r.sigma2:
            for t2 in r.tau2:
                rows.append(("A'(sigma2,tau2)", s2, t2, (b - a / n_sigma) / n_tau))
    return rows


def minimal_feasible_alpha(c: CellComplex, v: FaceVector) -> Fraction:
    """
    Least alpha in [0, 1] putting every coupling entry in [0, 1].

    Raises:
        CouplingFeasibilityError: no alpha works
    """
    low, high = Fraction(0), Fraction(1)
    for label, _, _, entry in coupling_entries(c, v):
        const, slope = entry
        if slope == 0:
            if not 0 <= const <= 1:
                raise CouplingFeasibilityError(f"entry {label} is constant {const}")
            continue
        bounds = sorted([-const / slope, (1 - const) / slope])
        low, high = max(low, bounds[0]), min(high, bounds[1])
    if low > high:
        raise CouplingFeasibilityError(f"no alpha makes the coupling of {v} feasible")
    return low


def paper_coupling(c: CellComplex, v: FaceVector, alpha: Fraction) -> Coupling:
    """
    Materialize the explicit coupling between m^alpha_tau and m^alpha_sigma.

    Raises:
        CouplingFeasibilityError: an entry lies outside [0, 1] at alpha
    """
    certify_quasiconvex(c)
    c.require_vector(v)
    alpha = Fraction(alpha)
    check_alpha(alpha)

    flow: Dict[Tuple[str, str], Fraction] = {}
    for label, source, target, entry in coupling_entries(c, v):
        mass = entry(alpha)
        if not 0 <= mass <= 1:
            raise CouplingFeasibilityError(
                f"coupling entry {label} = {mass} at alpha={alpha} for {v}; "
                f"minimal feasible alpha is {minimal_feasible_alpha(c, v)}"
            )
        if mass:
            flow[(source, target)] = flow.get((source, target), Fraction(0)) + mass

    try:
        return Coupling(
            flow=flow,
            source=measure_alpha(c, v.tau, alpha),
            target=measure_alpha(c, v.sigma, alpha),
        )
    except ValidationError as e:
        raise TransportError(f"explicit coupling for {v} is not a coupling: {e}") from e


def coupling_cost(c: CellComplex, coupling: Coupling) -> Fraction:
    """sum of mass * graph distance."""
    return sum(
        (m * c.distance(x, y) for (x, y), m in coupling.flow.items()), Fraction(0)
    )


# ============================================================================
# Dual witness
# ============================================================================


def _base_witness(c: CellComplex, v: FaceVector) -> Dict[str, int]:
    r = vector_roles(c, v)
    f: Dict[str, int] = {}
    if c.degree(v.sigma) >= c.degree(v.tau):
        f[r.tau], f[r.sigma] = 1, 0
        for mu, t1 in r.mu_tau1:
            f[mu], f[t1] = 2, 1
        for s1, rho in r.sigma1_rho:
            f[s1], f[rho] = 2, 1
        f.update({s2: 2 for s2 in r.sigma2})
        f.update({t2: -1 for t2 in r.tau2})
    else:
        # d_tau > d_sigma: mirrored table, shifted so f(tau) - f(sigma) = 1
        f[r.tau], f[r.sigma] = 1, 0
        for mu, t1 in r.mu_tau1:
            f[mu], f[t1] = 0, -1
        for s1, rho in r.sigma1_rho:
            f[s1], f[rho] = 0, -1
        f.update({s2: 2 for s2 in r.sigma2})
        f.update({t2: -1 for t2 in r.tau2})
    return f


def base_lipschitz_violations(c: CellComplex, f: Dict[str, int]) -> List[Tuple[str, str]]:
    """Base point pairs with |f(x) - f(y)| > d(x, y)."""
    return [
        (x, y)
        for x, y in combinations(f, 2)
        if abs(f[x] - f[y]) > c.distance(x, y)
    ]


def _witness_with_report(
    c: CellComplex, v: FaceVector, strict: bool
) -> Tuple[Dict[str, int], int]:
    certify_quasiconvex(c)
    c.require_vector(v)
    base = _base_witness(c, v)

    violations = base_lipschitz_violations(c, base)
    for x, y in violations:
        logger.warning(
            f"Witness for {v} is not 1-Lipschitz on {x}, {y}: "
            f"|{base[x]} - {base[y]}| > {c.distance(x, y)}"
        )
    if violations and strict:
        raise StructuralError(f"dual witness for {v} violates the Lipschitz condition")

    extended: Dict[str, int] = {}
    for x in c.cell_ids():
        dist = c.distances_from(x)
        reachable = [b for b in base if b in dist]
        if reachable:
            extended[x] = min(base[b] + dist[b] for b in reachable)

    for x, y in c.graph().edges:
        if x in extended and abs(extended[x] - extended[y]) > 1:
            raise StructuralError(f"extended witness for {v} jumps across ({x}, {y})")
    return extended, len(violations)


def paper_dual_witness(
    c: CellComplex, v: FaceVector, strict: Optional[bool] = None
) -> Dict[str, int]:
    """
    Integer 1-Lipschitz function with f(tau) - f(sigma) = 1, extended to the
    component of the vector by f(x) = min_b f(b) + d(x, b).

    Raises:
        StructuralError: the witness is not 1-Lipschitz
    """
    strict = settings.lipschitz_strict if strict is None else strict
    extended, _ = _witness_with_report(c, v, strict)
    return extended


def witness_value(f: Dict[str, int], mu: Measure, nu: Measure) -> Fraction:
    """sum f (mu - nu); a lower bound on W(mu, nu) for 1-Lipschitz f."""
    cells = set(mu.support) | set(nu.support)
    return sum((f[x] * (mu[x] - nu[x]) for x in cells), Fraction(0))


def comparison_cost(c: CellComplex, v: FaceVector, alpha: Fraction) -> Fraction:
    """alpha + (1 - alpha)(-Ric/d_max + 2(1/d_max - 1/d_min) - d_min/d_max + 2)."""
    record = counting_check(c, v)
    d_max, d_min = Fraction(record.d_max), Fraction(record.d_min)
    alpha = Fraction(alpha)
    bracket = -record.ric / d_max + 2 * (1 / d_max - 1 / d_min) - d_min / d_max + 2
    return alpha + (1 - alpha) * bracket


def certificate_sandwich(
    c: CellComplex, v: FaceVector, alpha: Optional[Fraction] = None
) -> SandwichRecord:
    """
    Witness value, exact W and explicit coupling cost at one alpha.

    Without ``alpha`` the larger of the configured default and the minimal
    feasible alpha is used.
    """
    certify_quasiconvex(c)
    minimal = minimal_feasible_alpha(c, v)
    alpha = max(settings.alpha, minimal) if alpha is None else Fraction(alpha)

    coupling = paper_coupling(c, v, alpha)
    f, violations = _witness_with_report(c, v, settings.lipschitz_strict)
    mu, nu = coupling.source, coupling.target
    record = SandwichRecord(
        vector=v,
        alpha=alpha,
        minimal_alpha=minimal,
        dual_value=witness_value(f, mu, nu),
        wasserstein=wasserstein(c, mu, nu).value,
        coupling_cost=coupling_cost(c, coupling),
        formula_cost=comparison_cost(c, v, alpha),
        lipschitz_violations=violations,
    )
    if not record.tight:
        logger.warning(
            f"Sandwich at {v} not tight: {record.dual_value} <= "
            f"{record.wasserstein} <= {record.coupling_cost}"
        )
    return record


__all__ = [
    "Affine",
    "Roles",
    "vector_roles",
    "coupling_entries",
    "minimal_feasible_alpha",
    "paper_coupling",
    "coupling_cost",
    "paper_dual_witness",
    "base_lipschitz_violations",
    "witness_value",
    "comparison_cost",
    "certificate_sandwich",
]
