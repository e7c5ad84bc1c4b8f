import pytest

from argeo import fixtures, parse_program
from argeo.lang import parse_literal


def load_fixture(name: str):
    fixture = next(f for f in fixtures.MANIFEST if f.name == name)
    return parse_program(fixtures.fixture_path(fixture).read_text())


def lit(text: str):
    return parse_literal(text)


@pytest.fixture
def married_john():
    return load_fixture("married_john")


@pytest.fixture
def running():
    return load_fixture("running")


@pytest.fixture
def lastlink():
    return load_fixture("lastlink")
