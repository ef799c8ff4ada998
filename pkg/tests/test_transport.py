"""
Test measures, the exact transportation solver and the explicit certificates.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from cellricci.complex import FaceVector, parse_complex_file
from cellricci.exceptions import (
    CouplingFeasibilityError,
    InvalidParameterError,
    TransportError,
    UndefinedMeasureError,
)
from cellricci.transport import (
    Measure,
    certificate_sandwich,
    comparison_cost,
    coupling_cost,
    graph_distance,
    measure_alpha,
    minimal_feasible_alpha,
    paper_coupling,
    paper_dual_witness,
    solve_transportation,
    wasserstein,
    witness_value,
)

TWO_SEGMENTS = """\
cell a 0
cell b 0
cell c 0
cell d 0
cell e 1
cell f 1
face e b +1
face e a -1
face f d +1
face f c -1
"""


# ============================================================================
# Measures
# ============================================================================


@pytest.mark.unit
def test_measure_on_c2_vertex(c2):
    """Test m^{1/2} at a vertex of C^2."""
    m = measure_alpha(c2, "v0", Fraction(1, 2))
    assert m["v0"] == Fraction(1, 2)
    for edge in ("v0v1", "v0v2", "v0v3"):
        assert m[edge] == Fraction(1, 6)
    assert sum(m.mass.values()) == 1


@pytest.mark.unit
def test_measure_alpha_one_is_point_mass(c2):
    """Test alpha = 1 leaves all mass at the cell."""
    assert measure_alpha(c2, "v0v1", 1).mass == {"v0v1": Fraction(1)}


@pytest.mark.unit
def test_measure_alpha_range(c2):
    """Test alpha outside [0, 1] is refused."""
    with pytest.raises(InvalidParameterError):
        measure_alpha(c2, "v0", Fraction(3, 2))
    with pytest.raises(InvalidParameterError):
        measure_alpha(c2, "v0", Fraction(-1, 2))


@pytest.mark.unit
def test_measure_undefined_at_isolated_cell():
    """Test m^alpha needs a positive degree."""
    c = parse_complex_file("cell p 0\n")
    with pytest.raises(UndefinedMeasureError):
        measure_alpha(c, "p", Fraction(1, 2))


@pytest.mark.unit
def test_measure_model_validation():
    """Test negative masses and wrong totals are refused."""
    with pytest.raises(ValidationError):
        Measure(mass={"a": Fraction(1, 2)})
    with pytest.raises(ValidationError):
        Measure(mass={"a": Fraction(3, 2), "b": Fraction(-1, 2)})
    assert Measure(mass={"a": 1, "b": 0}).support == ["a"]


# ============================================================================
# Solver
# ============================================================================


@pytest.mark.unit
def test_solver_small_instance():
    """Test a 2x2 instance and its dual prices."""
    costs = {("a", "x"): 1, ("a", "y"): 3, ("b", "x"): 2, ("b", "y"): 1}
    supply, demand = {"a": 2, "b": 1}, {"x": 2, "y": 1}
    solution = solve_transportation(supply, demand, lambda s, t: costs[(s, t)])
    assert solution.cost == 3
    assert solution.flow == {("a", "x"): 2, ("b", "y"): 1}
    assert solution.dual_value(supply, demand) == solution.cost
    for (s, t), c in costs.items():
        assert solution.source_prices[s] + solution.target_prices[t] <= c


@pytest.mark.unit
def test_solver_rejects_imbalance():
    """Test unequal totals are refused."""
    with pytest.raises(TransportError):
        solve_transportation({"a": 2}, {"x": 1}, lambda s, t: 1)


# ============================================================================
# Wasserstein
# ============================================================================


@pytest.mark.unit
def test_graph_distance(c2):
    """Test adjacency gives distance 1 and a vertex is 2 from its triangles."""
    assert graph_distance(c2, "v0v1", "v0") == 1
    assert graph_distance(c2, "v0", "v0") == 0
    assert graph_distance(c2, "v0", "v0v1v2") == 2


@pytest.mark.unit
def test_wasserstein_identity(c2):
    """Test W(mu, mu) = 0."""
    mu = measure_alpha(c2, "v0", Fraction(1, 3))
    certificate = wasserstein(c2, mu, mu)
    assert certificate.value == 0
    assert all(x == y for x, y, _ in certificate.coupling.rows())


@pytest.mark.unit
def test_wasserstein_point_masses(c2):
    """Test W(delta_tau, delta_sigma) = 1 for a vector."""
    mu, nu = measure_alpha(c2, "v0v1", 1), measure_alpha(c2, "v0", 1)
    assert wasserstein(c2, mu, nu).value == 1


@pytest.mark.unit
def test_wasserstein_torus(torus44):
    """Test W = 1 on the flat torus at alpha = 4/5."""
    v = torus44.vectors()[0]
    alpha = Fraction(4, 5)
    mu, nu = measure_alpha(torus44, v.tau, alpha), measure_alpha(torus44, v.sigma, alpha)
    certificate = wasserstein(torus44, mu, nu)
    assert certificate.value == 1
    assert certificate.primal_cost == certificate.dual_value == 1


@pytest.mark.unit
def test_potential_is_lipschitz(c2):
    """Test the Kantorovich potential is 1-Lipschitz on G_M."""
    v = FaceVector("v0v1", "v0")
    alpha = Fraction(1, 2)
    certificate = wasserstein(
        c2, measure_alpha(c2, v.tau, alpha), measure_alpha(c2, v.sigma, alpha)
    )
    phi = certificate.potential
    for x, y in c2.graph().edges:
        assert abs(phi[x] - phi[y]) <= 1
    assert certificate.value == comparison_cost(c2, v, alpha)


@pytest.mark.unit
def test_wasserstein_across_components():
    """Test supports in different components are refused."""
    c = parse_complex_file(TWO_SEGMENTS)
    mu = measure_alpha(c, "a", Fraction(1, 2))
    nu = measure_alpha(c, "c", Fraction(1, 2))
    with pytest.raises(TransportError):
        wasserstein(c, mu, nu)


# ============================================================================
# Certificates
# ============================================================================


@pytest.mark.unit
def test_minimal_feasible_alpha(c2, torus44):
    """Test degenerate tables need alpha >= 1/(d_max + 1); flat ones need none."""
    assert minimal_feasible_alpha(c2, FaceVector("v0v1", "v0")) == Fraction(1, 5)
    assert minimal_feasible_alpha(torus44, torus44.vectors()[0]) == 0


@pytest.mark.unit
def test_coupling_marginals(c2):
    """Test the explicit coupling reproduces both measures at alpha = 9/10."""
    v = FaceVector("v0v1", "v0")
    alpha = Fraction(9, 10)
    coupling = paper_coupling(c2, v, alpha)
    assert coupling.source == measure_alpha(c2, v.tau, alpha)
    assert coupling.target == measure_alpha(c2, v.sigma, alpha)
    assert coupling_cost(c2, coupling) == comparison_cost(c2, v, alpha)


@pytest.mark.unit
def test_coupling_infeasible_alpha(c2):
    """Test alpha below the minimal feasible value is refused."""
    with pytest.raises(CouplingFeasibilityError):
        paper_coupling(c2, FaceVector("v0v1", "v0"), Fraction(1, 10))


@pytest.mark.unit
def test_dual_witness(c2):
    """Test f(tau) - f(sigma) = 1 and f is 1-Lipschitz after extension."""
    v = FaceVector("v0v1", "v0")
    f = paper_dual_witness(c2, v)
    assert f[v.tau] - f[v.sigma] == 1
    assert set(f) == set(c2.cell_ids())
    for x, y in c2.graph().edges:
        assert abs(f[x] - f[y]) <= 1


@pytest.mark.unit
def test_comparison_cost_value(c2):
    """Test the closed-form cost on C^2 at alpha = 1/2."""
    assert comparison_cost(c2, FaceVector("v0v1", "v0"), Fraction(1, 2)) == Fraction(11, 12)


@pytest.mark.unit
@pytest.mark.parametrize("name", ["C2", "torus44", "grid33", "cylinder"])
def test_sandwich_tight(small_corpus, name):
    """Test witness value = W = coupling cost on every vector."""
    c = small_corpus[name]
    for v in c.vectors():
        record = certificate_sandwich(c, v)
        assert record.ordered
        assert record.tight, record.to_row()
        assert record.alpha >= record.minimal_alpha
        assert record.lipschitz_violations == 0


@pytest.mark.unit
def test_witness_value_matches_wasserstein(c3):
    """Test the dual witness attains W on C^3 at alpha = 1/2."""
    alpha = Fraction(1, 2)
    for v in c3.vectors()[:10]:
        mu, nu = measure_alpha(c3, v.tau, alpha), measure_alpha(c3, v.sigma, alpha)
        f = paper_dual_witness(c3, v)
        assert witness_value(f, mu, nu) == wasserstein(c3, mu, nu).value


def _random_measure(c, rng, size=3):
    cells = c.cell_ids()
    picks = rng.choice(len(cells), size=size, replace=False)
    weights = {cells[int(i)]: int(rng.integers(1, 6)) for i in picks}
    total = sum(weights.values())
    return Measure(mass={cid: Fraction(w, total) for cid, w in weights.items()})


@pytest.mark.unit
@pytest.mark.parametrize("name", ["c2", "torus54"])
def test_wasserstein_symmetric_and_separating(name, request, rng):
    """Test W(mu, nu) = W(nu, mu) and W = 0 exactly when mu = nu."""
    c = request.getfixturevalue(name)
    for _ in range(25):
        mu, nu = _random_measure(c, rng), _random_measure(c, rng)
        forward = wasserstein(c, mu, nu).value
        assert forward == wasserstein(c, nu, mu).value
        assert (forward == 0) == (mu == nu)
        assert forward >= 0
        assert wasserstein(c, mu, mu).value == 0
