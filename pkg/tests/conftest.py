"""Pytest configuration and shared fixtures."""

import io
from collections.abc import Generator
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from src.core.cyclic_sets.constructions import circle_set
from src.core.cyclic_sets.finite_sets import FiniteCyclicSet
from src.core.facade import CyclicFacade
from src.core.groups.ftuples import GroupCyclicStructure, make_cyclic_structure
from src.core.groups.ordered_group import IntegerGroup, RationalGroup
from src.core.realization.circle import CirclePoint
from src.core.setup import reset_application_registry, setup_registry

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_application_registry() -> Generator[None, None, None]:
    """Reset the global model registry around every test."""
    reset_application_registry()
    yield
    reset_application_registry()


@pytest.fixture
def facade() -> CyclicFacade:
    """Facade over a private registry.

    Returns:
        CyclicFacade instance

    """
    return CyclicFacade(setup_registry())


@pytest.fixture
def rational_structure() -> GroupCyclicStructure:
    """Cyclic structure of (ℚ, +) with z = 1 on [0, 1]."""
    return make_cyclic_structure(RationalGroup())


@pytest.fixture
def finite_structure() -> GroupCyclicStructure:
    """Cyclic structure of (ℤ, +) with z = 3 on the interval 2* = {0, 1, 2, 3}."""
    return make_cyclic_structure(IntegerGroup(3))


@pytest.fixture
def circle3() -> FiniteCyclicSet:
    """Circle C truncated at level 3."""
    return circle_set(3)


@pytest.fixture
def rational_point(rational_structure):
    """Build circle points of the rational model from ``p/q`` strings.

    Returns:
        Callable turning a string into a CirclePoint

    """

    def build(text: str) -> CirclePoint:
        return CirclePoint(rational_structure.interval, Fraction(text))

    return build


@pytest.fixture
def cocycle_fixture_text() -> str:
    """Expected text of ``cocycle tables``."""
    return (FIXTURES_DIR / "cocycle_tables.txt").read_text(encoding="utf-8")


@pytest.fixture
def stdin_factory():
    """Build a text stream standing in for stdin."""
    return io.StringIO
