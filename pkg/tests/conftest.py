import pytest

from yarts import cache, progress


@pytest.fixture(autouse=True)
def quiet_and_uncached():
    progress.set_quiet(True)
    cache.set_enabled(False)
    yield
    cache.set_enabled(True)
    progress.set_quiet(False)
