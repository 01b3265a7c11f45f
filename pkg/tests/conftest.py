from fractions import Fraction

import pytest

from invarops.lie import Character, LieAlgebra, Subspace, make_setup


def sl2_algebra() -> LieAlgebra:
    # basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H
    return LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
    )


def so3_algebra() -> LieAlgebra:
    # [X,Y] = Z, [Y,Z] = X, [Z,X] = Y
    return LieAlgebra(
        ["X", "Y", "Z"],
        {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0], (1, 2): [1, 0, 0]},
    )


def heisenberg_algebra() -> LieAlgebra:
    return LieAlgebra(["X", "Y", "Z"], {(0, 1): [0, 0, 1]})


@pytest.fixture(scope="session")
def sl2():
    return sl2_algebra()


@pytest.fixture(scope="session")
def so3():
    return so3_algebra()


@pytest.fixture(scope="session")
def heis():
    return heisenberg_algebra()


@pytest.fixture(scope="session")
def horocycle(sl2):
    """sl2 with h = span{E}, m = span{H, K = E - F}, zero character."""
    h = Subspace(sl2, [[0, 1, 0]], names=["E"])
    m = Subspace(sl2, [[1, 0, 0], [0, 1, -1]], names=["H", "K"])
    return make_setup(sl2, h, m, name="sl2r_horocycle")


@pytest.fixture(scope="session")
def sphere(so3):
    h = Subspace(so3, [[0, 0, 1]], names=["Z"])
    m = Subspace(so3, [[1, 0, 0], [0, 1, 0]], names=["X", "Y"])
    return make_setup(so3, h, m, name="so3_sphere")


@pytest.fixture(scope="session")
def heis_setup(heis):
    h = Subspace(heis, [[1, 0, 0]], names=["X"])
    m = Subspace(heis, [[0, 1, 0], [0, 0, 1]], names=["Y", "Z"])
    return make_setup(heis, h, m, name="heisenberg")


@pytest.fixture(scope="session")
def hyperbolic(sl2):
    h = Subspace(sl2, [[0, 1, -1]], names=["W"])
    m = Subspace(sl2, [[1, 0, 0], [0, 1, 1]], names=["H", "P"])
    return make_setup(sl2, h, m, name="sl2r_hyperbolic")


@pytest.fixture(scope="session")
def sl2_free(sl2):
    """Whole sl2 as complement of the zero subalgebra, PBW order H < F < E."""
    h = Subspace(sl2, [])
    m = Subspace(sl2, [[1, 0, 0], [0, 0, 1], [0, 1, 0]], names=["H", "F", "E"])
    return make_setup(sl2, h, m, name="sl2_free")


@pytest.fixture(scope="session")
def so3_free(so3):
    h = Subspace(so3, [])
    m = Subspace(so3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], names=["X", "Y", "Z"])
    return make_setup(so3, h, m, name="so3_free")


@pytest.fixture(scope="session")
def heis_free(heis):
    h = Subspace(heis, [])
    m = Subspace(heis, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], names=["X", "Y", "Z"])
    return make_setup(heis, h, m, name="heis_free")


@pytest.fixture(scope="session")
def line_setup():
    """One-dimensional abelian algebra, h = 0: invariants are all of S(m)."""
    alg = LieAlgebra(["A"], {})
    return make_setup(alg, Subspace(alg, []), Subspace(alg, [[1]], names=["A"]))
