import pytest

from jawi.corpus import default_corpus
from jawi.rules import default_table


@pytest.fixture(scope="session")
def table():
    return default_table()


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
