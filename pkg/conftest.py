import itertools
import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from qmds.gf import build_field  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full acceptance grid")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 1)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf25():
    return build_field(5, 1)


@pytest.fixture(scope="session")
def gf49():
    return build_field(7, 1)


@pytest.fixture(scope="session")
def subfield_solutions():
    """Exhaustive solver: every x in (GF(q)*)^cols with A x = 0."""

    def solve(A):
        ctx = A.ctx
        units = ctx.subfield_elements().tolist()
        candidates = np.array(list(itertools.product(units, repeat=A.cols)), dtype=np.int64)
        residuals = ctx.total(ctx.mul(A.entries[None, :, :], candidates[:, None, :]), axis=2)
        return {tuple(row) for row in candidates[~residuals.any(axis=1)].tolist()}

    return solve
