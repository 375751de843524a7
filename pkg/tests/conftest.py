from __future__ import annotations

from pathlib import Path

import pytest

from vscreen.features.extract import FeatureExtractor

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def extractor() -> FeatureExtractor:
    # asset loading is the expensive part; share one instance
    return FeatureExtractor()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
