"""
Pytest configuration and shared fixtures.
"""

import tempfile
from pathlib import Path

import pytest

from sentifuzz.ingest import ingest
from sentifuzz.lexicon import load_fixture_lexicon
from sentifuzz.resources import (
    GOLDEN_PRETAGGED_FILE,
    GOLDEN_RAW_FILE,
    GOLDEN_TRANSLATIONS_FILE,
    data_dir as bundled_data_dir,
)
from sentifuzz.tagging import parse_pretagged

GOLDEN_SCORES = [0.25, 0.25, 0.375, 0.375, 0.1875, -0.75, 0.375, -1.0, 0.625, 0.6875]
GOLDEN_WEIGHTS = [0.9, 0.95, 0.95, 0.95, 0.9, 0.95, 0.95, 0.95, 1.0, 0.95]
GOLDEN_LABELS = [
    "positive",
    "positive",
    "positive",
    "positive",
    "weak_positive",
    "negative",
    "positive",
    "negative",
    "positive",
    "positive",
]


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def temp_config_file(temp_dir):
    """Create a temporary config file path."""
    return temp_dir / "test_config.json"


@pytest.fixture
def data_dir():
    """The bundled data directory."""
    return bundled_data_dir()


@pytest.fixture
def fixture_lexicon():
    """The bundled fixture lexicon."""
    return load_fixture_lexicon()


@pytest.fixture
def golden_pretagged_path(data_dir):
    return data_dir / GOLDEN_PRETAGGED_FILE


@pytest.fixture
def golden_raw_path(data_dir):
    return data_dir / GOLDEN_RAW_FILE


@pytest.fixture
def golden_translations_path(data_dir):
    return data_dir / GOLDEN_TRANSLATIONS_FILE


@pytest.fixture
def golden_posts(golden_pretagged_path):
    """The ten reference posts, pre-tagged."""
    return ingest(golden_pretagged_path, "pretagged")


@pytest.fixture
def tagged():
    """Parse a pre-tagged body into tokens."""
    return parse_pretagged
