"""Combinatorial 0-, 1- and 2-forms and their operators."""

from cellricci.forms.models import OneForm, TwoForm, ZeroForm
from cellricci.forms.operations import (
    BochnerTerms,
    bochner_ric,
    bochner_terms,
    covariant_sq,
    d_one,
    d_star_one,
    d_star_two,
    d_zero,
    hodge_laplacian_one,
    inner_one,
    inner_zero,
    laplacian_flat_sq,
    laplacian_zero,
)

__all__ = [
    "ZeroForm",
    "OneForm",
    "TwoForm",
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
