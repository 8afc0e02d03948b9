# Ensure the src directory is in sys.path for test discovery and imports
import sys
import os
src_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src'))
if src_path not in sys.path:
    sys.path.insert(0, src_path)

import pytest
from dotenv import load_dotenv
from pathlib import Path
from typing import Generator

from config import get_settings
from graph_core.models import MultilayerGraph
from storage.backends.istorage_backend import IStorageBackend
from storage.backends.local_file_backend import LocalFileBackend
from tests.helpers.graph_helpers import path_graph, threshold_graph


@pytest.fixture(scope="session", autouse=True)
def load_test_env():
    """
    Automatically load .env.test for all tests in this session.
    """
    env_path = Path(__file__).parent.parent / '.env.test'
    if env_path.exists():
        load_dotenv(dotenv_path=env_path, override=True)
        print(f"Loaded test environment from: {env_path}")
    else:
        print(f"Warning: .env.test file not found at {env_path}")


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Settings are cached per process; tests that touch the environment get a clean copy."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# --- Backend Fixtures ---

@pytest.fixture(scope="function")
def local_backend(tmp_path) -> IStorageBackend:
    """LocalFileBackend rooted in a per-test temporary directory."""
    return LocalFileBackend(str(tmp_path / "store"))


# --- Graph Fixtures ---

@pytest.fixture
def extremal_graph() -> MultilayerGraph:
    return threshold_graph()


@pytest.fixture
def small_path_graph() -> MultilayerGraph:
    return path_graph()
