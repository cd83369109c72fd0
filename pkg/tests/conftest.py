import pytest

from sweepmap import Path, PathDiagram


@pytest.fixture
def fig_path() -> Path:
    """The worked six-step Dyck path used throughout the fixtures."""
    return Path((2, 0, 2, -3, 1, -2))


@pytest.fixture
def nine_arrow_diagram() -> PathDiagram:
    """The nine-arrow diagram with scattered ranks and known row counts."""
    return PathDiagram((2, 2, 2, 0, -1, 3, 0, -4, -4), (1, 4, 0, 3, 2, 4, 6, 4, 5))
