import pytest

from oscalc.catalog import catalog

CATALOG_NAMES = [
    "wheel3",
    "yuz8",
    "nonfano",
    "x2",
    "k33graphic",
    "k33dual",
    "k33dual-trunc",
    "boolean:4",
    "uniform:3,5",
]


@pytest.fixture(scope="session")
def entries():
    """Catalog entries by name; built once so per-matroid memo tables are shared."""
    return {e.name: e for e in catalog()}


@pytest.fixture(scope="session")
def wheel3(entries):
    return entries["wheel3"].matroid


@pytest.fixture(scope="session")
def yuz8(entries):
    return entries["yuz8"].matroid


@pytest.fixture(scope="session")
def nonfano(entries):
    return entries["nonfano"].matroid


@pytest.fixture(scope="session")
def x2(entries):
    return entries["x2"].matroid


@pytest.fixture(scope="session")
def boolean4(entries):
    return entries["boolean:4"].matroid


@pytest.fixture(scope="session")
def u35(entries):
    return entries["uniform:3,5"].matroid
