import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from involat.catalog import catalog_get, names  # noqa: E402
from involat.constructs import direct_product  # noqa: E402


@pytest.fixture(scope="session")
def cat():
    """Catalog lookup shared across tests (entries are rebuilt each call)."""
    return catalog_get


@pytest.fixture(scope="session")
def k3b2():
    return direct_product(catalog_get("K3"), catalog_get("B2"))


ALL_NAMES = names()
