import pytest

from mmisr.bench import atlas_graphs
from mmisr.graph import all_independent_sets


@pytest.fixture(scope="session")
def atlas():
    return atlas_graphs()


@pytest.fixture(scope="session")
def atlas_with_sets(atlas):
    return [(g, all_independent_sets(g)) for g in atlas]
