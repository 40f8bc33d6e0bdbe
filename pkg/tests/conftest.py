import pytest
from hypothesis import HealthCheck, settings

from bol2 import Alphabet, BasisCache

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ab() -> Alphabet:
    return Alphabet("ab")


@pytest.fixture(scope="session")
def abc() -> Alphabet:
    return Alphabet("abc")


@pytest.fixture()
def fresh_cache() -> BasisCache:
    """A cache with no shared state, for tests about cache behaviour itself."""
    return BasisCache()
