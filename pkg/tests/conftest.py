"""
Shared fixtures for the surgeon test suite.
"""

import math
from pathlib import Path

import numpy as np
import pytest

from src.cusped.slopes import CuspShape, Slope, normalized_length
from src.utils.config import PROJECT_ROOT
from src.utils.logger import get_logger


# Handlers bind sys.stderr on first use; create them before capsys swaps it
for _name in ('src.cli.runner', 'src.cli.auditor'):
    get_logger(_name)


@pytest.fixture
def fixtures_dir() -> Path:
    return PROJECT_ROOT / 'data' / 'manifolds'


@pytest.fixture
def tables_dir() -> Path:
    return PROJECT_ROOT / 'data' / 'tables'


@pytest.fixture
def square_cusp() -> CuspShape:
    return CuspShape(1, 1j)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def brute_force_slopes():
    """Box scan of all primitive slopes up to a normalized length."""
    def scan(cusp, max_length):
        root_area = math.sqrt(cusp.area)
        q_max = math.ceil(max_length * abs(cusp.mu) / root_area) + 2
        found = []
        for q in range(0, q_max + 1):
            p_max = math.ceil((max_length * root_area + q * abs(cusp.lam)) / abs(cusp.mu)) + 2
            for p in range(-p_max, p_max + 1):
                if math.gcd(p, q) != 1 or (q == 0 and p != 1):
                    continue
                slope = Slope(p, q)
                if normalized_length(slope, cusp) <= max_length:
                    found.append(slope)
        return sorted(found, key=lambda s: (normalized_length(s, cusp), s.q, s.p))

    return scan
