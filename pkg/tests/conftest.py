"""
Pytest configuration and shared fixtures.
"""
import sys
from dataclasses import replace
from pathlib import Path

import pytest

# Add the repository root to path so `src` imports resolve
root_path = Path(__file__).parent.parent
sys.path.insert(0, str(root_path))

from src.harness.fixtures import load_all_fixtures  # noqa: E402
from tests.helpers import build_state  # noqa: E402


@pytest.fixture
def state_factory():
    return build_state


@pytest.fixture
def exhausted_state():
    """Deck empty and a single discard: nothing can be drawn."""
    state = build_state((30, 2, 14, 22, 39), 5)
    return replace(state, deck=[], discard=[5])


@pytest.fixture(scope="session")
def published_scripts():
    """The three published evolved scripts, keyed by preset name."""
    return load_all_fixtures()
