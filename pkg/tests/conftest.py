from pathlib import Path

import numpy as np
import pytest

from labyrinth import _kernels
from labyrinth.generators import snake_cross
from labyrinth.grid import Pattern, read_pattern

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Pattern:
    return read_pattern((FIXTURES / name).read_text())


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load cached) numba kernels once so timed tests measure work, not JIT."""
    be = _kernels.get_backend("numba")
    nbr = _kernels.white_graph(snake_cross(1).cells)[1]
    dist, parent = be.bfs(nbr, 0)
    be.trace(parent, dist, int(np.argmax(dist)))
    be.prune(nbr, np.zeros(nbr.shape[0], dtype=bool))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
