import hypothesis
import pytest

from quiverdt import field, load_fixture

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def a2():
    return load_fixture("a2")


@pytest.fixture(scope="session")
def jordan3():
    return load_fixture("jordan_l3")


@pytest.fixture(scope="session")
def jordan2():
    return load_fixture("jordan_l2")


@pytest.fixture(scope="session")
def loop3():
    return load_fixture("three_loop")


@pytest.fixture(scope="session")
def conifold():
    return load_fixture("conifold")


@pytest.fixture(scope="session")
def F2():
    return field(2)


@pytest.fixture(scope="session")
def F3():
    return field(3)
