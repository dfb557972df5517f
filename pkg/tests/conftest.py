import pytest

from binom3k import builtin_catalog, get_record, make_context


@pytest.fixture(scope="session")
def ctx30():
    return make_context(30)


@pytest.fixture(scope="session")
def ctx40():
    return make_context(40)


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def record_of(catalog):
    def lookup(record_id):
        return get_record(catalog, record_id)
    return lookup
