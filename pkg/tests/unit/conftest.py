"""Fixtures for the UNIT test layer (pure arithmetic, no harness).

Everything under ``tests/unit/`` is automatically marked ``unit`` (hook
``pytest_collection_modifyitems`` in ``tests/conftest.py``).
"""

import pytest

from src.characters import kronecker_char
from src.quadfield import embed_field, quad_field


@pytest.fixture
def chi5():
    return kronecker_char(5)


@pytest.fixture
def golden_field():
    """Q(sqrt 5) at p = 11, known mod 11^6."""
    return embed_field(quad_field(5), 11, 6)
