import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

# transpose of the incidence matrix printed for EG(2,2), all points x all lines
PRINTED_EG22_H2T = np.array([
    [1, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 1, 0],
], dtype=np.uint8)

# lines x nonzero points incidence printed for EG(2,3)
PRINTED_EG23_H1 = np.array([
    [0, 1, 0, 0, 1, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0],
], dtype=np.uint8)

PRINTED_EG22_H1 = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=np.uint8)

PRINTED_EG22_CLASSES = [
    np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8),
    np.array([[1, 0, 1, 0], [0, 1, 0, 1]], dtype=np.uint8),
    np.array([[1, 0, 0, 1], [0, 1, 1, 0]], dtype=np.uint8),
]

# our line order for EG(2,2) is l1,l4,l2,l5,l3,l6; column c of ours is column EG22_LINE_PERM[c] printed
EG22_LINE_PERM = [0, 3, 1, 4, 2, 5]


@pytest.fixture
def rng():
    return np.random.default_rng(20231016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
