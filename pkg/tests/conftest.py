import pytest

from orbicheck import fusion, lattices, orthogonal


@pytest.fixture(scope="session")
def leech():
    return lattices.leech()


@pytest.fixture(scope="session")
def ring():
    return fusion.FusionRing()


@pytest.fixture(scope="session")
def geometry(ring, leech):
    from orbicheck.extension import ExtensionGeometry
    return ExtensionGeometry(ring, leech)


@pytest.fixture(scope="session")
def rspace(ring):
    return orthogonal.QuadSpaceF3(ring.gram())


@pytest.fixture(scope="session")
def orth_group(rspace):
    grp, gens = orthogonal.build_orthogonal_group(rspace, seed=0)
    return grp
