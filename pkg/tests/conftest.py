import pytest

from pglab import Harness


@pytest.fixture(scope="session")
def harness():
    """One shared harness over the default corpus; bundles are cached."""
    return Harness()


@pytest.fixture(scope="session")
def reports(harness):
    """All verification reports, keyed by case id."""
    return {r.theorem: r for r in harness.run_all()}
