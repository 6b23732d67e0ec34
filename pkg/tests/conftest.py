import numpy as np
import pytest

from morphlat.metrics import metric


@pytest.fixture
def met():
    return metric("euclidean")


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)
