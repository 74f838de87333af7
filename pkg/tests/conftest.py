import random

import pytest

from tcarr.catalog import build
from tcarr.matroid import Arrangement, LinearOrder

# fixed integer matrices with n <= 7 and rank <= 3
SEED_MATRICES = {
    "circle": [[1]],
    "boolean2": [[1, 0], [0, 1]],
    "braid3": [[1, 0], [0, 1], [1, -1]],
    "pencil4": [[1, 0], [0, 1], [1, -1], [1, 1]],
    "pencil5": [[1, 0], [0, 1], [1, -1], [1, 1], [1, 2]],
    "boolean3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "braid4": [[1, -1, 0], [1, 0, -1], [1, 0, 0], [0, 1, -1], [0, 1, 0], [0, 0, 1]],
    "U34": [[1, 1, 1], [1, 2, 4], [1, 3, 9], [1, 4, 16]],
    "U35": [[1, 1, 1], [1, 2, 4], [1, 3, 9], [1, 4, 16], [1, 5, 25]],
    "U36": [[1, t, t * t] for t in range(1, 7)],
    "U37": [[1, t, t * t] for t in range(1, 8)],
    "nearpencil": [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0], [0, 0, 1]],
    "X3": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]],
    "nonfano": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]],
    "braid4+x": [[1, -1, 0], [1, 0, -1], [1, 0, 0], [0, 1, -1], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
    "pencil4+z": [[1, 0, 0], [0, 1, 0], [1, -1, 0], [1, 1, 0], [0, 0, 1], [1, 0, 1]],
    "mixed7": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 0], [2, 1, 0], [1, 1, 3], [0, 1, 1]],
    "rank2_6": [[1, k] for k in range(6)],
}


def seed_arrangements(max_n=7):
    return {name: Arrangement(rows, name=name) for name, rows in SEED_MATRICES.items() if len(rows) <= max_n}


def random_orders(n, count, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        seq = list(range(n))
        rng.shuffle(seq)
        out.append(LinearOrder(seq))
    return out


@pytest.fixture(scope="session")
def braid3():
    return build("braid:3")


@pytest.fixture(scope="session")
def braid4():
    return build("braid:4")


@pytest.fixture(scope="session")
def u34():
    return build("generic:4:3")


@pytest.fixture(scope="session")
def u35():
    return build("generic:5:3")


@pytest.fixture(scope="session")
def circle():
    return build("circle")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
