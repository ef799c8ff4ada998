"""
Differential operators on combinatorial forms and the Bochner decomposition.

A 1-form is stored normalized: the raw coefficient of sigma in omega(tau) is
[tau:sigma] * omega^tau_sigma. The differential of a degree -d map is
d(omega) = boundary . omega - (-1)^d omega . boundary, and every d* is the
adjoint of d under the Kronecker inner product.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from loguru import logger

from cellricci.complex.models import CellComplex, FaceVector
from cellricci.config import settings
from cellricci.curvature.forman import neighbor_sets
from cellricci.exceptions import BochnerIdentityError
from cellricci.forms.models import OneForm, TwoForm, ZeroForm
from cellricci.utils.rationals import Number


# ============================================================================
# d and d* between 0-, 1- and 2-forms
# ============================================================================


def d_zero(c: CellComplex, f: ZeroForm) -> OneForm:
    """(df)^tau_sigma = f_tau - f_sigma."""
    return OneForm({v: f[v.tau] - f[v.sigma] for v in c.vectors()})


def d_star_one(c: CellComplex, w: OneForm) -> ZeroForm:
    """d*w(x) = sum_{rho < x} w^x_rho - sum_{tau > x} w^tau_x."""
    values: Dict[str, Number] = {}
    for x in c.cell_ids():
        down = sum((w[FaceVector(x, rho)] for rho in c.faces(x)), 0)
        up = sum((w[FaceVector(tau, x)] for tau in c.cofaces(x)), 0)
        values[x] = down - up
    return ZeroForm(values)


def laplacian_zero(c: CellComplex, f: ZeroForm) -> ZeroForm:
    """Delta f = d* d f, i.e. d_x f_x minus the sum of f over faces and cofaces."""
    return d_star_one(c, d_zero(c, f))


def d_one(c: CellComplex, w: OneForm) -> TwoForm:
    """eta(tau, rho) = sum_sigma [tau:sigma][sigma:rho] (w^tau_sigma + w^sigma_rho)."""
    values: Dict[Tuple[str, str], Number] = {}
    for tau in c.cell_ids():
        for sigma in c.faces(tau):
            outer = c.sign(tau, sigma)
            for rho in c.faces(sigma):
                term = outer * c.sign(sigma, rho) * (
                    w[FaceVector(tau, sigma)] + w[FaceVector(sigma, rho)]
                )
                values[(tau, rho)] = values.get((tau, rho), 0) + term
    return TwoForm(values)


def d_star_two(c: CellComplex, eta: TwoForm) -> OneForm:
    """Adjoint of ``d_one`` on normalized 1-forms."""
    values: Dict[FaceVector, Number] = {}
    for v in c.vectors():
        total: Number = 0
        for rho in c.faces(v.sigma):
            total += c.sign(v.sigma, rho) * eta[(v.tau, rho)]
        for mu in c.cofaces(v.tau):
            total += c.sign(mu, v.tau) * eta[(mu, v.sigma)]
        values[v] = c.sign(v.tau, v.sigma) * total
    return OneForm(values)


def hodge_laplacian_one(c: CellComplex, w: OneForm) -> OneForm:
    """Delta w = d d* w + d* d w."""
    down = d_zero(c, d_star_one(c, w))
    up = d_star_two(c, d_one(c, w))
    return OneForm({v: down[v] + up[v] for v in c.vectors()})


def inner_zero(c: CellComplex, f: ZeroForm, g: ZeroForm) -> Number:
    return sum((f[x] * g[x] for x in c.cell_ids()), 0)


def inner_one(c: CellComplex, u: OneForm, w: OneForm) -> Number:
    return sum((u[v] * w[v] for v in c.vectors()), 0)


# ============================================================================
# Bochner decomposition
# ============================================================================


def covariant_sq(c: CellComplex, w: OneForm, v: FaceVector) -> Number:
    """|nabla w|^2 at v: squared differences over N2, squared sums over N0."""
    ns = neighbor_sets(c, v)
    wv = w[v]
    two = sum(((wv - w[u]) ** 2 for u in ns.two), 0)
    zero = sum(((wv + w[u]) ** 2 for u in ns.zero), 0)
    return two + zero


def laplacian_flat_sq(c: CellComplex, w: OneForm, v: FaceVector) -> Number:
    """Delta-flat |w|^2 at v: sum of w_v^2 - w_u^2 over all 0- and 2-neighbors."""
    ns = neighbor_sets(c, v)
    wv2 = w[v] ** 2
    return sum((wv2 - w[u] ** 2 for u in ns.two + ns.zero), 0)


@dataclass(frozen=True)
class BochnerTerms:
    """The pieces of Ric(w) at one vector."""

    vector: FaceVector
    inner: Number
    covariant: Number
    flat: Number
    closed_form: Number

    @property
    def ric(self) -> Number:
        """<Delta w, w> - |nabla w|^2 / 2 - flat / 2, flat oriented like Delta f = d f_v - sum f."""
        return self.inner - self.covariant / 2 - self.flat / 2

    @property
    def residual(self) -> Number:
        """Deviation of ric from the closed form (2 - #N0) w_v^2."""
        return self.ric - self.closed_form

    @property
    def printed_combination(self) -> Number:
        """<Delta w, w> - |nabla w|^2 / 2 + flat / 2; differs from ric by ``flat``."""
        return self.inner - self.covariant / 2 + self.flat / 2


def bochner_terms(
    c: CellComplex,
    w: OneForm,
    v: FaceVector,
    delta: Optional[OneForm] = None,
) -> BochnerTerms:
    """
    Evaluate the Bochner pieces at ``v``.

    Args:
        c: Complex (certified quasiconvex by the caller)
        w: One-form
        v: Vector
        delta: Precomputed hodge_laplacian_one(c, w), reused across vectors

    Returns:
        BochnerTerms
    """
    c.require_vector(v)
    if delta is None:
        delta = hodge_laplacian_one(c, w)
    ns = neighbor_sets(c, v)
    return BochnerTerms(
        vector=v,
        inner=delta[v] * w[v],
        covariant=covariant_sq(c, w, v),
        flat=laplacian_flat_sq(c, w, v),
        closed_form=(2 - len(ns.zero)) * w[v] ** 2,
    )


def bochner_ric(
    c: CellComplex,
    w: OneForm,
    v: FaceVector,
    delta: Optional[OneForm] = None,
    tolerance: Optional[float] = None,
) -> Number:
    """
    Ric(w)(v) = <Delta w, w>(v) - |nabla w|^2(v) / 2 - Delta-flat |w|^2(v) / 2.

    Raises:
        BochnerIdentityError: the value deviates from (2 - #N0) w_v^2
    """
    tolerance = settings.bochner_tolerance if tolerance is None else tolerance
    terms = bochner_terms(c, w, v, delta)
    if abs(terms.residual) > tolerance:
        logger.error(f"Bochner identity off by {terms.residual} at {v}")
        raise BochnerIdentityError(
            f"Ric(w) at {v} is {terms.ric}, expected {terms.closed_form}"
        )
    return terms.ric


__all__ = [
    "d_zero",
    "d_star_one",
    "laplacian_zero",
    "d_one",
    "d_star_two",
    "hodge_laplacian_one",
    "inner_zero",
    "inner_one",
    "covariant_sq",
    "laplacian_flat_sq",
    "BochnerTerms",
    "bochner_terms",
    "bochner_ric",
]
