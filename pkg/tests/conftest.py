import pytest

from app.config import get_settings
from app.root_data import parse_type


@pytest.fixture
def a1():
    return parse_type("A1")


@pytest.fixture
def a2():
    return parse_type("A2")


@pytest.fixture
def caps():
    """Restore the cached settings after a test lowers a cap"""
    settings = get_settings()
    saved = (settings.max_basis, settings.max_weyl, settings.max_lambda)
    yield settings
    settings.max_basis, settings.max_weyl, settings.max_lambda = saved
