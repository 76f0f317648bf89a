from pathlib import Path

import pytest

from latindist import SquareGrid, parse_grid_text

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def load_golden(name: str) -> SquareGrid:
    return parse_grid_text((FIXTURE_DIR / name).read_text())


@pytest.fixture(scope="session")
def golden():
    """Loader for the golden grid files shipped under tests/fixtures."""
    return load_golden
