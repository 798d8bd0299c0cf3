"""
Shared fixtures: the shipped catalogue and two small hand-built automata.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from common.catalog import CatalogueService
from common.mealy_core import MealyAutomaton


@pytest.fixture(scope="session")
def service() -> CatalogueService:
    catalogue = CatalogueService()
    catalogue.initialize()
    return catalogue


@pytest.fixture(scope="session")
def catalogue_automaton(service):
    def load(key: int) -> MealyAutomaton:
        return service.get(key).automaton
    return load


@pytest.fixture
def odometer() -> MealyAutomaton:
    """Binary adding machine: a = (1, a) on 1, swaps the first letter."""
    return MealyAutomaton.from_rows("odometer", 2, [
        ("a", [(1, "e"), (0, "a")]),
        ("e", [(0, "e"), (1, "e")]),
    ])


@pytest.fixture
def trivial() -> MealyAutomaton:
    return MealyAutomaton.from_rows("trivial", 2, [
        ("e", [(0, "e"), (1, "e")]),
    ])
