"""Shared fixtures: small fields and classic permutation groups."""

import pytest

from core.models.gfield import field_make
from core.models.permutation import Permutation
from core.tools.groupkit import closure


@pytest.fixture(scope="session")
def f7():
    return field_make(7)


@pytest.fixture(scope="session")
def f11():
    return field_make(11)


@pytest.fixture(scope="session")
def f9():
    return field_make(3, 2)


@pytest.fixture(scope="session")
def f8():
    return field_make(2, 3)


@pytest.fixture(scope="session")
def f49():
    return field_make(7, 2)


@pytest.fixture(scope="session")
def s4():
    return closure(
        [Permutation.from_cycles(4, [[0, 1, 2, 3]]), Permutation.from_cycles(4, [[0, 1]])],
        name="S4",
    )


@pytest.fixture(scope="session")
def a5():
    return closure(
        [Permutation.from_cycles(5, [[0, 1, 2, 3, 4]]), Permutation.from_cycles(5, [[0, 1, 2]])],
        name="A5",
    )


@pytest.fixture(scope="session")
def v4():
    return closure(
        [Permutation.from_cycles(4, [[0, 1], [2, 3]]), Permutation.from_cycles(4, [[0, 2], [1, 3]])],
        name="V4",
    )
