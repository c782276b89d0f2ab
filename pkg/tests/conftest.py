"""
Shared fixtures: the named example posets, a small family for property
checks and paths to the shipped poset files.
"""
import os
from pathlib import Path

import pytest

from src.common.config import get_settings
from src.posets import boolean_algebra, m_poset, poset_b2, poset_from_pairs, poset_p4

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "posets"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test reads POSET_TOOLKIT_* from a clean environment."""
    for name in list(os.environ):
        if name.startswith("POSET_TOOLKIT_"):
            monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def b2():
    return poset_b2()


@pytest.fixture
def p4():
    return poset_p4()


@pytest.fixture
def c3():
    """The chain c1 < c2 < c3."""
    return poset_from_pairs([("c1", "c2"), ("c2", "c3")])


@pytest.fixture
def m2():
    return m_poset(2)


@pytest.fixture
def f1():
    return poset_from_pairs([("1", "2")])


@pytest.fixture
def f2():
    return poset_from_pairs([("1", "1"), ("2", "3")])


@pytest.fixture
def square():
    return boolean_algebra(2)


@pytest.fixture
def data_dir():
    return DATA_DIR
