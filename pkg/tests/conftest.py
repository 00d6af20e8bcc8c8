import os
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.append(str(Path(__file__).parent.parent))

from src.data import catalog  # noqa: E402

TEST_COUNT = int(os.getenv("PACKING_TEST_COUNT", "40"))


@pytest.fixture
def test_count() -> int:
    """Generated instances per class in the default (non-slow) run"""
    return TEST_COUNT


@pytest.fixture(scope="session")
def named():
    """Catalog graphs by name"""
    return {name: catalog.get(name).graph() for name in catalog.names()}


@pytest.fixture
def clean_env(monkeypatch):
    """No PACKING_* settings leak in from the developer's shell or .env"""
    for key in list(os.environ):
        if key.startswith("PACKING_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr("src.config.load_dotenv", lambda *args, **kwargs: False)
    return monkeypatch
