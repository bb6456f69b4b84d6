import numpy as np
import pytest

from hypertype.config import use_settings


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(autouse=True)
def environment_settings():
    previous = use_settings(None)
    yield
    use_settings(previous)


@pytest.fixture
def client():
    from app import app
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client
