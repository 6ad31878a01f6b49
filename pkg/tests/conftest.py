import pytest

from srgborsuk import graph as gc
from srgborsuk import representation as rp
from srgborsuk.params import SrgParams

G24 = SrgParams(416, 100, 36, 20)


@pytest.fixture(scope="session")
def g24():
    return gc.load_g2_4()


@pytest.fixture(scope="session")
def g24_coords(g24):
    return rp.realize_coordinates(g24, rp.rep_parameters(G24))


@pytest.fixture(scope="session")
def corpus():
    return gc.srg_corpus()
