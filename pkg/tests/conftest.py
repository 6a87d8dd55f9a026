"""
Configuration, plugins and fixtures for `pytest`.
"""

import pytest
from _pytest.monkeypatch import MonkeyPatch

from interval_impropriety._constants import THREADS_ENV_VAR
from interval_impropriety.exact import SearchBudget

pytest_plugins = [
    'tests.interval_impropriety.fixtures.graphs',
    'tests.interval_impropriety.fixtures.colorings',
]


@pytest.fixture(name='single_worker', autouse=True)
def fixture_single_worker(monkeypatch: MonkeyPatch) -> None:
    """
    Run searches in the test process unless a test asks for workers.
    """
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


@pytest.fixture()
def budget() -> SearchBudget:
    """
    A budget large enough for every graph used in the tests.
    """
    return SearchBudget(max_nodes=5_000_000)
