import pytest

from argdec_tools.bases.instance import load_instance
from argdec_tools.logic.vocabulary import Decision
from tests.fixtures import CONFLICT, MULTI_GOAL, UMBRELLA


@pytest.fixture
def umbrella():
    return load_instance(UMBRELLA)


@pytest.fixture
def conflict():
    return load_instance(CONFLICT)


@pytest.fixture
def multi_goal():
    return load_instance(MULTI_GOAL)


@pytest.fixture
def take():
    return Decision.of("u")


@pytest.fixture
def leave():
    return Decision.of("~u")
