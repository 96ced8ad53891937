import pytest

from narql import chinook_catalog, load_bundled_lexicon, load_bundled_seed


@pytest.fixture(scope="session")
def lexicon():
    return load_bundled_lexicon()


@pytest.fixture(scope="session")
def schema():
    return chinook_catalog()


@pytest.fixture()
def db():
    # fresh per test: deletes and inserts mutate the instance
    return load_bundled_seed()
