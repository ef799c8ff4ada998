"""
Test alpha-Ricci curvature, the LLY limit and the comparison with Ric.
"""

from fractions import Fraction

import pytest

from cellricci.complex import FaceVector, build_point, parse_complex_file
from cellricci.curvature import (
    LLYRecord,
    alpha_ricci,
    comparison_formula,
    global_lower_bound,
    kappa_alpha_profile,
    lly_record,
    lly_ricci,
    mismatches,
    ric,
    verify_theorem,
)
from cellricci.exceptions import (
    ComplexValidationError,
    InvalidParameterError,
    LimitNotStabilizedError,
    StructuralError,
    TransportError,
)
from cellricci.transport import graph_distance

TWO_SEGMENTS = """\
cell a 0
cell b 0
cell e 1
face e b +1
face e a -1
cell p 0
cell q 0
cell f 1
face f q +1
face f p -1
"""


@pytest.mark.unit
def test_alpha_ricci_torus(torus44):
    """Test kappa_alpha = 0 on the flat torus at alpha = 4/5."""
    v = torus44.vectors()[0]
    assert alpha_ricci(torus44, v.tau, v.sigma, Fraction(4, 5)) == 0


@pytest.mark.unit
def test_alpha_ricci_rejects_bad_input(c2):
    """Test identical cells and alpha = 1 are refused."""
    with pytest.raises(InvalidParameterError):
        alpha_ricci(c2, "v0", "v0", Fraction(1, 2))
    with pytest.raises(InvalidParameterError):
        alpha_ricci(c2, "v0v1", "v0", Fraction(1))


@pytest.mark.unit
def test_alpha_ricci_across_components():
    """Test pairs in different components are refused."""
    c = parse_complex_file(TWO_SEGMENTS)
    with pytest.raises(TransportError):
        alpha_ricci(c, "a", "p", Fraction(1, 2))


@pytest.mark.unit
def test_lly_c2(c2):
    """Test kappa = 1/6 on both kinds of vector of C^2."""
    assert lly_ricci(c2, FaceVector("v0v1", "v0")) == Fraction(1, 6)
    assert lly_ricci(c2, FaceVector("v0v1v2", "v0v1")) == Fraction(1, 6)


@pytest.mark.unit
def test_lly_c3_middle(c3):
    """Test kappa = 2/5 on a middle vector of C^3."""
    assert lly_ricci(c3, FaceVector("v0v1v2", "v0v1")) == Fraction(2, 5)


@pytest.mark.unit
def test_lly_flat_torus(torus44):
    """Test kappa = 0 on the flat torus."""
    for v in torus44.vectors()[:8]:
        assert lly_ricci(torus44, v) == 0


@pytest.mark.unit
def test_comparison_formula_values(c2, torus44):
    """Test the closed form on C^2 and on the torus."""
    assert comparison_formula(c2, FaceVector("v0v1", "v0")) == Fraction(1, 6)
    assert comparison_formula(torus44, torus44.vectors()[0]) == 0


@pytest.mark.unit
def test_comparison_formula_regular(torus54):
    """Test a d-regular complex gives Ric / d."""
    for v in torus54.vectors()[:5]:
        assert comparison_formula(torus54, v) == 0


@pytest.mark.unit
def test_comparison_refuses_non_quasiconvex(non_quasiconvex_text):
    """Test the closed form is not extrapolated to invalid complexes."""
    c = parse_complex_file(non_quasiconvex_text)
    with pytest.raises(ComplexValidationError):
        comparison_formula(c, FaceVector("ab", "a"))


@pytest.mark.unit
def test_limit_stabilizes_on_first_pair(c2):
    """Test the first two samples already agree."""
    record = lly_record(c2, FaceVector("v0v1", "v0"))
    assert record.match
    assert record.alpha_used == Fraction(8, 9)
    assert len(record.kappa_alpha_samples) == 2
    h = [value for _, value in record.h_samples()]
    assert h[0] == h[1] == Fraction(1, 6)


@pytest.mark.unit
def test_limit_cap(c2, monkeypatch):
    """Test a moving ratio hits the refinement cap."""
    import cellricci.curvature.lly as lly

    calls = iter(range(1, 1000))
    monkeypatch.setattr(lly, "alpha_ricci", lambda *args: Fraction(next(calls), 10**6))
    with pytest.raises(LimitNotStabilizedError):
        lly.lly_ricci(c2, FaceVector("v0v1", "v0"), max_iterations=3)


@pytest.mark.unit
def test_verify_theorem_c2(c2):
    """Test all 24 vectors of C^2 agree with the closed form."""
    records = verify_theorem(c2, jobs=1)
    assert len(records) == 24
    assert mismatches(records) == []
    assert [r.vector for r in records] == list(c2.vectors())


@pytest.mark.unit
@pytest.mark.slow
def test_verify_theorem_parallel_matches_serial(c2):
    """Test fan-out keeps canonical order and values."""
    serial = verify_theorem(c2, jobs=1)
    parallel = verify_theorem(c2, jobs=2)
    assert [r.to_row() for r in parallel] == [r.to_row() for r in serial]


@pytest.mark.unit
def test_global_lower_bound(c2):
    """Test kappa_min = 1/6 on C^2, with and without precomputed records."""
    assert global_lower_bound(c2) == Fraction(1, 6)
    assert global_lower_bound(c2, verify_theorem(c2, jobs=1)) == Fraction(1, 6)


@pytest.mark.unit
def test_kappa_alpha_upper_bound(small_corpus):
    """Test kappa_alpha <= (1 - alpha) 2 / d for sampled alphas."""
    for c in small_corpus.values():
        for v in c.vectors()[:6]:
            for alpha, kappa in kappa_alpha_profile(c, v):
                assert kappa <= (1 - alpha) * 2


@pytest.mark.unit
def test_h_monotone(small_corpus):
    """Test kappa_alpha / (1 - alpha) is non-decreasing on the grid."""
    for c in small_corpus.values():
        for v in c.vectors()[:6]:
            profile = kappa_alpha_profile(c, v)
            h = [kappa / (1 - alpha) for alpha, kappa in profile]
            assert all(x <= y for x, y in zip(h, h[1:]))


@pytest.mark.unit
def test_record_rows(c2):
    """Test compare rows print rationals as p/q."""
    record = lly_record(c2, FaceVector("v0v1", "v0"))
    assert record.to_row() == ["v0v1", "v0", "1", "1/6", "1/6", "yes"]
    assert record.to_dict()["match"] is True


@pytest.mark.unit
def test_record_mismatch_flag():
    """Test match is False when the two values differ."""
    record = LLYRecord(
        vector=FaceVector("e", "a"),
        ric=1,
        kappa=Fraction(1, 6),
        formula_value=Fraction(1, 5),
        alpha_used=Fraction(1, 2),
    )
    assert not record.match
    assert mismatches([record]) == [record]


@pytest.mark.unit
def test_curvature_entry_points_refuse_non_quasiconvex(non_quasiconvex_text):
    """Test every public curvature function refuses the glued triangles."""
    c = parse_complex_file(non_quasiconvex_text)
    v = FaceVector("ab", "a")
    with pytest.raises(ComplexValidationError):
        ric(c, v)
    with pytest.raises(ComplexValidationError):
        lly_ricci(c, v)
    with pytest.raises(ComplexValidationError):
        alpha_ricci(c, "a", "c", Fraction(1, 2))
    with pytest.raises(ComplexValidationError):
        kappa_alpha_profile(c, v)


@pytest.mark.unit
def test_global_lower_bound_without_vectors():
    """Test kappa_min is refused on a complex with no vectors."""
    with pytest.raises(StructuralError):
        global_lower_bound(build_point())
    with pytest.raises(StructuralError):
        global_lower_bound(build_point(), records=[])


@pytest.mark.unit
@pytest.mark.parametrize("name", ["C3", "grid33"])
def test_kappa_alpha_upper_bound_far_pairs(corpus, name):
    """Test kappa_alpha(a, b) <= (1 - alpha) 2 / d(a, b) for d(a, b) >= 2."""
    c = corpus[name]
    cells = c.cell_ids()
    checked = 0
    for a in cells[::5]:
        for b in cells:
            distance = graph_distance(c, a, b)
            if distance < 2:
                continue
            for alpha in (Fraction(0), Fraction(1, 2), Fraction(4, 5)):
                kappa = alpha_ricci(c, a, b, alpha)
                assert kappa <= (1 - alpha) * 2 / distance, (a, b, alpha)
            checked += 1
    assert checked > 0
