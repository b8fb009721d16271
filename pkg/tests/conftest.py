from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# Reference first terms of the two headline presets.
STERN_TERMS = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1]
TWISTED_TERMS = [0, 1, -1, 0, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1, 2]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
