import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

import qprobe.config as qconfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: end-to-end checks that take minutes")


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture(autouse=True)
def quiet():
    qconfig.VERBOSE = 0
    yield
    qconfig.VERBOSE = 0
