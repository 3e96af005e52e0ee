import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def classes_upto6():
    from tourmod.enumeration import all_tournaments
    return [t for n in range(1, 7) for t in all_tournaments(n)]
