import pytest

from planecharge.corpus import enumerate_class, named_examples


@pytest.fixture(scope="session")
def named():
    return {ng.name: ng.graph for ng in named_examples()}


@pytest.fixture(scope="session")
def class_members_6():
    return list(enumerate_class(6))


@pytest.fixture(scope="session")
def class_members_7():
    return list(enumerate_class(7))
