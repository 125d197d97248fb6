"""
Pytest configuration and shared fixtures for all tests.
"""

import pytest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from horadam_quat.sequence.views import HoradamParams  # noqa: E402


@pytest.fixture
def fibonacci_params():
    """Classical Fibonacci numbers: p = q = 1, seeds 0, 1."""
    return HoradamParams.fibonacci(1, 1)


@pytest.fixture
def lucas_params():
    """Classical Lucas numbers: p = q = 1, seeds 2, 1."""
    return HoradamParams.lucas(1, 1)


@pytest.fixture
def pell_params():
    """Pell numbers: p = 2, q = 1, seeds 0, 1."""
    return HoradamParams.fibonacci(2, 1)


@pytest.fixture
def jacobsthal_params():
    """Jacobsthal numbers: p = 1, q = 2 (|q| != 1 exposes the negative-index convention)."""
    return HoradamParams.fibonacci(1, 2)


@pytest.fixture
def small_grid():
    """A handful of non-degenerate (p, q, a, b) tuples covering signs and |q| > 1."""
    return [
        HoradamParams(1, 1, 0, 1),
        HoradamParams(2, 1, 0, 1),
        HoradamParams(1, 2, 2, 1),
        HoradamParams(-1, 3, 1, -2),
        HoradamParams(3, -2, -1, 2),
        HoradamParams(0, -1, 2, 0),
        HoradamParams(-2, -3, 1, 1),
    ]


@pytest.fixture(autouse=True)
def session_log(tmp_path, monkeypatch):
    """Route the CLI session log into the test's temp directory and keep verify in-process."""
    log_file = tmp_path / "horadam_quat.log"
    monkeypatch.setenv("HORADAM_QUAT_LOG_FILE", str(log_file))
    monkeypatch.setenv("HORADAM_QUAT_JOBS", "1")
    return log_file


@pytest.fixture(autouse=True)
def suppress_logging():
    """Suppress logging output during tests for cleaner output."""
    import logging

    original_level = logging.root.level
    logging.root.setLevel(logging.ERROR)
    yield
    logging.root.setLevel(original_level)


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "integration: mark test as integration test (may be slower)"
    )
    config.addinivalue_line(
        "markers", "unit: mark test as unit test (fast, isolated)"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers automatically."""
    for item in items:
        # Add marker based on test path
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
        elif "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
