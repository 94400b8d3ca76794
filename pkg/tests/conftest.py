import logging

import pytest

from resolvedim.core import config
from resolvedim.families.generators import (
    gen_cayley_zn,
    gen_cocktail_party,
    gen_cycle,
    gen_jellyfish,
)
from resolvedim.graph.operations import all_pairs_distances, build_graph


@pytest.fixture(autouse=True)
def sequential_config(monkeypatch):
    # los tests no dependen de RESOLVEDIM_THREADS del entorno
    monkeypatch.setattr(config, "THREADS", 0)
    yield
    # main() instala un handler ligado al stderr capturado del test
    package_logger = logging.getLogger("resolvedim")
    for handler in package_logger.handlers[:]:
        package_logger.removeHandler(handler)


@pytest.fixture
def jfg32():
    return gen_jellyfish(3, 2)


@pytest.fixture
def jfg32_dm(jfg32):
    return all_pairs_distances(jfg32)


@pytest.fixture
def cp8():
    """Cay(Z_8, S_3), la forma de Cayley de CP(4)."""
    return gen_cayley_zn(8, 3)


@pytest.fixture
def cp8_dm(cp8):
    return all_pairs_distances(cp8)


@pytest.fixture
def c4():
    return gen_cycle(4)


@pytest.fixture
def octahedron():
    return gen_cocktail_party(3)


@pytest.fixture
def path5():
    return build_graph(5, [(i, i + 1) for i in range(4)])


@pytest.fixture
def two_edges():
    return build_graph(4, [(0, 1), (2, 3)])
