"""Shared fixtures for the test suite."""

import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import reset_settings  # noqa: E402
from utils import make_rng, random_permutation, random_point_set  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Each test sees defaults, a single thread and a private data directory."""
    monkeypatch.setenv("ROLLER_THREADS", "1")
    monkeypatch.setenv("ROLLER_DATA_PATH", str(tmp_path))
    monkeypatch.delenv("ROLLER_REPORT_DB", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    return make_rng(20240601)


@pytest.fixture
def permutations_of(rng):
    """Factory: count random permutations of size n from the shared generator."""
    def make(n, count):
        return [random_permutation(n, rng) for _ in range(count)]
    return make


@pytest.fixture
def point_sets(rng):
    def make(size, count):
        return [random_point_set(size, rng) for _ in range(count)]
    return make
