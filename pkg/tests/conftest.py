import numpy as np
import pytest

from pointweyl import PointConfig


def random_config(rng, m, min_sep=0.3, box=None):
    """Rejection-sample ``m`` points in a cube with pairwise distance >= ``min_sep``."""
    box = box if box is not None else max(1.0, 0.8 * m ** (1 / 3))
    pts = []
    while len(pts) < m:
        p = rng.uniform(-box, box, 3)
        if all(np.linalg.norm(p - q) >= min_sep for q in pts):
            pts.append(p)
    return PointConfig(np.array(pts))


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def two_points():
    return PointConfig([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0]])


@pytest.fixture
def one_point():
    return PointConfig([[0.0, 0.0, 0.0]])


ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
