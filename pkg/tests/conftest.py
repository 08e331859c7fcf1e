import pytest
from hypothesis import settings

from tlmarkov.coxeter import build_graph
from tlmarkov.suites import fc_elements

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def e6():
    return build_graph(6)


@pytest.fixture(scope="session")
def e7():
    return build_graph(7)


@pytest.fixture(scope="session")
def e6_elements():
    return fc_elements(6)
