"""Shared fixtures: a quiet check context and CLI helpers."""

import pytest

from src.modules.verify.checks import CheckContext
from src.modules.verify.commands import main


@pytest.fixture
def ctx():
    """Check context with a small unit sample so the identity checks stay fast."""
    return CheckContext(units_per_prime=10, seed=7)


@pytest.fixture
def run_cli(capsys):
    """Runs ``padic-cnf`` in-process and returns (exit code, stdout, stderr)."""

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def pytest_collection_modifyitems(config, items):
    """Auto-marks by path: ``tests/unit/`` => ``unit``; everything else => ``integration``.

    Enables the fast loop ``pytest -m unit`` (pure arithmetic) versus
    ``pytest -m integration`` (verify service and CLI over real grids).
    Markers are declared in ``pyproject.toml`` (``--strict-markers`` is on).
    """
    for item in items:
        parts = item.path.parts
        idx = parts.index("tests") if "tests" in parts else -1
        is_unit = idx != -1 and len(parts) > idx + 1 and parts[idx + 1] == "unit"
        item.add_marker("unit" if is_unit else "integration")
