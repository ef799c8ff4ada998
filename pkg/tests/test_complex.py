"""
Test the cell-complex model, builders and structural validation.
"""

import pickle

import networkx as nx
import pytest

from cellricci.complex import (
    Cell,
    CellComplex,
    FaceVector,
    IncidencePair,
    build_cycle,
    build_interval_grid,
    build_path,
    build_point,
    build_simplex_boundary,
    build_torus_grid,
    connected_components,
    diameter,
    is_bipartite_by_dimension,
    parse_complex_file,
    product,
    require_valid,
    serialize_complex,
    validate,
)
from cellricci.curvature import ric
from cellricci.exceptions import (
    ComplexValidationError,
    InvalidParameterError,
    StructuralError,
)


# ============================================================================
# Model
# ============================================================================


@pytest.mark.unit
def test_cell_rejects_bad_ids():
    """Test ids with whitespace and negative dimensions are refused."""
    with pytest.raises(ComplexValidationError):
        Cell("a b", 0)
    with pytest.raises(ComplexValidationError):
        Cell("a", -1)
    assert Cell("a", 0).label == "a"


@pytest.mark.unit
def test_incidence_sign_must_be_unit():
    """Test only +1 and -1 are accepted as incidence numbers."""
    with pytest.raises(ComplexValidationError):
        IncidencePair("e", "v", 2)


@pytest.mark.unit
def test_complex_rejects_inconsistent_input():
    """Test duplicate ids, dangling incidences and dimension gaps."""
    with pytest.raises(ComplexValidationError):
        CellComplex([Cell("a", 0), Cell("a", 0)], [])
    with pytest.raises(ComplexValidationError):
        CellComplex([Cell("e", 1)], [IncidencePair("e", "v", 1)])
    with pytest.raises(ComplexValidationError):
        CellComplex([Cell("t", 2), Cell("v", 0)], [IncidencePair("t", "v", 1)])
    with pytest.raises(ComplexValidationError):
        CellComplex(
            [Cell("e", 1), Cell("v", 0)],
            [IncidencePair("e", "v", 1), IncidencePair("e", "v", -1)],
        )


@pytest.mark.unit
def test_complex_is_immutable(c2):
    """Test attributes cannot be reassigned after construction."""
    with pytest.raises(AttributeError):
        c2._cells = {}
    with pytest.raises(TypeError):
        c2.cells["x"] = Cell("x", 0)


@pytest.mark.unit
def test_canonical_order(c2):
    """Test cells come ordered by dimension, then id."""
    ids = c2.cell_ids()
    keys = [(c2.cell(cid).dim, cid) for cid in ids]
    assert keys == sorted(keys)
    assert ids[:4] == ("v0", "v1", "v2", "v3")


@pytest.mark.unit
def test_vectors_in_canonical_order(c2):
    """Test vectors are ordered by dim tau, then ids."""
    vectors = c2.vectors()
    assert len(vectors) == 24
    assert list(vectors) == sorted(vectors, key=c2.vector_key)
    assert vectors[0] == FaceVector("v0v1", "v0")


@pytest.mark.unit
def test_equality_hash_and_pickle(c2):
    """Test complexes compare structurally and survive pickling."""
    again = build_simplex_boundary(2)
    assert again == c2
    assert hash(again) == hash(c2)
    assert pickle.loads(pickle.dumps(c2)) == c2
    assert c2 != build_simplex_boundary(3)


@pytest.mark.unit
def test_unknown_cell_lookup(c2):
    """Test lookups of missing cells raise StructuralError."""
    with pytest.raises(StructuralError):
        c2.cell("nope")
    with pytest.raises(StructuralError):
        c2.require_vector(FaceVector("v0v1", "v2"))


@pytest.mark.unit
def test_degrees_on_c2(c2):
    """Test vertex, edge and triangle degrees of C^2."""
    assert c2.degree("v0") == 3
    assert c2.degree("v0v1") == 4
    assert c2.degree("v0v1v2") == 3
    assert len(c2.cofaces("v0v1")) == 2


@pytest.mark.unit
def test_closure(c2):
    """Test the closed face set of a triangle."""
    assert c2.closure("v0v1v2") == frozenset(
        {"v0v1v2", "v0v1", "v0v2", "v1v2", "v0", "v1", "v2"}
    )


@pytest.mark.unit
def test_distances(c2):
    """Test hop distances in G_M."""
    assert c2.distance("v0v1", "v0") == 1
    assert c2.distance("v0", "v0") == 0
    assert c2.distance("v0", "v0v1v2") == 2
    assert c2.distance("v0", "v1v2v3") == 4


# ============================================================================
# Builders
# ============================================================================


@pytest.mark.unit
@pytest.mark.parametrize(
    "n,f_vector",
    [(1, (3, 3)), (2, (4, 6, 4)), (3, (5, 10, 10, 5)), (4, (6, 15, 20, 15, 6))],
)
def test_simplex_boundary_f_vector(n, f_vector):
    """Test C^n has the f-vector of the (n+1)-simplex boundary."""
    assert build_simplex_boundary(n).f_vector() == f_vector


@pytest.mark.unit
def test_simplex_boundary_middle_degree(c4):
    """Test p-cells with 1 <= p <= n-1 have n+2 neighbors."""
    for cid in c4.cell_ids():
        if 1 <= c4.cell(cid).dim <= 3:
            assert c4.degree(cid) == 6


@pytest.mark.unit
@pytest.mark.parametrize(
    "lengths,f_vector",
    [([2], (3, 2)), ([1, 1], (4, 4, 1)), ([3, 3], (16, 24, 9))],
)
def test_grid_f_vector(lengths, f_vector):
    """Test grid cell counts."""
    assert build_interval_grid(lengths).f_vector() == f_vector


@pytest.mark.unit
@pytest.mark.parametrize("k1,k2,f_vector", [(4, 4, (16, 32, 16)), (5, 4, (20, 40, 20))])
def test_torus_f_vector(k1, k2, f_vector):
    """Test torus counts (Euler characteristic 0)."""
    torus = build_torus_grid(k1, k2)
    assert torus.f_vector() == f_vector
    assert f_vector[0] - f_vector[1] + f_vector[2] == 0


@pytest.mark.unit
def test_product_counts():
    """Test triangle boundary times an edge is a three-square cylinder."""
    cylinder = product(build_simplex_boundary(1), build_path(1))
    assert cylinder.f_vector() == (6, 9, 3)


@pytest.mark.unit
def test_product_with_point_is_identity():
    """Test X x point has the same shape as X."""
    path = build_path(3)
    prod = product(path, build_point())
    assert prod.f_vector() == path.f_vector()
    assert nx.is_isomorphic(prod.graph(), path.graph())


@pytest.mark.unit
def test_path_product_matches_grid():
    """Test path(2) x path(2) equals the [2, 2] grid."""
    assert product(build_path(2), build_path(2)) == build_interval_grid([2, 2])


@pytest.mark.unit
@pytest.mark.parametrize(
    "build",
    [
        lambda: build_path(0),
        lambda: build_cycle(2),
        lambda: build_simplex_boundary(0),
        lambda: build_torus_grid(3, 4),
        lambda: build_interval_grid([]),
    ],
)
def test_builder_parameter_errors(build):
    """Test degenerate builder parameters are refused."""
    with pytest.raises(InvalidParameterError):
        build()


# ============================================================================
# Validation
# ============================================================================


@pytest.mark.unit
def test_corpus_passes_validation(corpus):
    """Test every corpus complex is regular and quasiconvex."""
    for name, c in corpus.items():
        report = validate(c)
        assert report.passed, (name, report.violations)
        assert report.violations == []


@pytest.mark.unit
def test_single_square_diamond():
    """Test a unit square satisfies the diamond property."""
    report = validate(build_interval_grid([1, 1]))
    assert report.diamond
    assert report.passed


@pytest.mark.unit
def test_glued_triangles_not_quasiconvex(non_quasiconvex_text):
    """Test two triangles glued along two edges fail quasiconvexity only."""
    c = parse_complex_file(non_quasiconvex_text)
    report = validate(c)
    assert not report.quasiconvex
    assert report.boundary_squared
    assert report.diamond
    assert report.failed_checks() == ["quasiconvex"]
    with pytest.raises(ComplexValidationError) as exc_info:
        require_valid(c)
    assert exc_info.value.report is not None


@pytest.mark.unit
def test_bad_signs_fail_boundary_squared():
    """Test dd != 0 is reported when a square's signs do not cancel."""
    square = build_interval_grid([1, 1])
    pairs = [
        IncidencePair(p.tau, p.sigma, -p.sign) if (p.tau, p.sigma) == ("e0*e0", "v0*e0") else p
        for p in square.incidence_pairs()
    ]
    report = validate(CellComplex(list(square), pairs))
    assert not report.boundary_squared
    assert "boundary_squared" in report.failed_checks()


@pytest.mark.unit
def test_isolated_cell_warning():
    """Test isolated cells are reported as warnings, not violations."""
    c = CellComplex([Cell("p", 0), Cell("q", 0)], [])
    report = validate(c)
    assert report.passed
    assert len(report.warnings) == 2


@pytest.mark.unit
def test_bipartite_by_dimension(corpus):
    """Test dimension parity 2-colours G_M."""
    for c in corpus.values():
        assert is_bipartite_by_dimension(c)


@pytest.mark.unit
def test_components_and_diameter(c2):
    """Test C^2 is connected with diameter 4; a disjoint union is not."""
    assert len(connected_components(c2)) == 1
    assert diameter(c2) == 4

    two = CellComplex([Cell("p", 0), Cell("q", 0)], [])
    assert len(connected_components(two)) == 2
    with pytest.raises(StructuralError):
        diameter(two)


@pytest.mark.unit
def test_validate_leaves_complex_unchanged(c2, non_quasiconvex_text):
    """Test validation reads the complex without altering it."""
    glued = parse_complex_file(non_quasiconvex_text)
    for c in (c2, glued):
        before, before_hash = serialize_complex(c), hash(c)
        validate(c)
        assert serialize_complex(c) == before
        assert hash(c) == before_hash


@pytest.mark.unit
def test_product_is_associative():
    """Test (A x B) x C and A x (B x C) agree on vectors and Ric."""
    a, b, c = build_path(1), build_path(1), build_path(2)
    left = product(product(a, b), c)
    right = product(a, product(b, c))
    assert left.f_vector() == right.f_vector()
    assert set(left.vectors()) == set(right.vectors())
    assert {v: ric(left, v) for v in left.vectors()} == {
        v: ric(right, v) for v in right.vectors()
    }
