import numpy as np
import pytest

from contextium.settings import get_settings
from contextium.spin import kcbs_pentagon


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that touch CONTEXTIUM_* env vars need a clean read."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def pentagon():
    return kcbs_pentagon()
