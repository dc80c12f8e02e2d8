"""
Test configuration and fixtures for staraut tests.
"""
import os
import random

import pytest

# Add parent directory to Python path for imports
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


@pytest.fixture
def test_config():
    """Small bounds with DEBUG logging."""
    from core.config import StarautConfig
    return StarautConfig.create_for_testing()


@pytest.fixture
def rng():
    """Seeded random source."""
    return random.Random(1234)


@pytest.fixture
def z2():
    from algebra.groups import FinAbGroup
    return FinAbGroup((2,))


@pytest.fixture
def z3():
    from algebra.groups import FinAbGroup
    return FinAbGroup((3,))


@pytest.fixture
def z4():
    from algebra.groups import FinAbGroup
    return FinAbGroup((4,))


@pytest.fixture
def z2xz2():
    from algebra.groups import FinAbGroup
    return FinAbGroup((2, 2))
