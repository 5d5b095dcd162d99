import numpy as np
import pytest

from blockmatch.frame_io import StarSpec, generate_displaced_star, generate_star


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def star_pair():
    spec = StarSpec()
    return spec, generate_star(spec), generate_displaced_star(spec)
