"""
Pytest configuration and fixtures.

Provides the corpus complexes shared by all tests.
"""

import numpy as np
import pytest

from cellricci.complex import (
    CellComplex,
    build_interval_grid,
    build_path,
    build_simplex_boundary,
    build_torus_grid,
    product,
)


# ============================================================================
# Corpus Complexes
# ============================================================================


@pytest.fixture(scope="session")
def c2() -> CellComplex:
    """Boundary of the tetrahedron: f-vector (4, 6, 4)."""
    return build_simplex_boundary(2)


@pytest.fixture(scope="session")
def c3() -> CellComplex:
    return build_simplex_boundary(3)


@pytest.fixture(scope="session")
def c4() -> CellComplex:
    return build_simplex_boundary(4)


@pytest.fixture(scope="session")
def torus44() -> CellComplex:
    return build_torus_grid(4, 4)


@pytest.fixture(scope="session")
def torus54() -> CellComplex:
    return build_torus_grid(5, 4)


@pytest.fixture(scope="session")
def grid33() -> CellComplex:
    return build_interval_grid([3, 3])


@pytest.fixture(scope="session")
def cylinder() -> CellComplex:
    """Triangle boundary times a path with two edges."""
    return product(build_simplex_boundary(1), build_path(2))


@pytest.fixture(scope="session")
def corpus(c2, c3, c4, torus44, torus54, grid33, cylinder) -> dict:
    """Every corpus complex by name."""
    return {
        "C2": c2,
        "C3": c3,
        "C4": c4,
        "torus44": torus44,
        "torus54": torus54,
        "grid33": grid33,
        "cylinder": cylinder,
    }


@pytest.fixture(scope="session")
def small_corpus(c2, torus44, grid33, cylinder) -> dict:
    """Corpus members cheap enough for per-sample loops."""
    return {"C2": c2, "torus44": torus44, "grid33": grid33, "cylinder": cylinder}


# ============================================================================
# Text Fixtures
# ============================================================================


@pytest.fixture
def non_quasiconvex_text() -> str:
    """Two triangles glued along two edges; a and c are joined by two edges."""
    return """\
# two triangles sharing ab and bc
cell a 0
cell b 0
cell c 0
cell ab 1
cell bc 1
cell ac1 1
cell ac2 1
cell t1 2
cell t2 2
face ab b +1
face ab a -1
face bc c +1
face bc b -1
face ac1 c +1
face ac1 a -1
face ac2 c +1
face ac2 a -1
face t1 ab +1
face t1 bc +1
face t1 ac1 -1
face t2 ab +1
face t2 bc +1
face t2 ac2 -1
"""


@pytest.fixture
def segment_text() -> str:
    """One edge between two vertices."""
    return "cell a 0\ncell b 0\ncell e 1\nface e b +1\nface e a -1\n"


# ============================================================================
# Helper Fixtures
# ============================================================================


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property samples are reproducible."""
    return np.random.default_rng(20240611)
