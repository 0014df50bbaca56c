
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Every test gets its own empty structure-constant directory."""
    from flagcalc.cohomology import STORE

    monkeypatch.setenv("FLAGCALC_CACHE_DIR", str(tmp_path / "cache"))
    STORE.reset()
    yield tmp_path / "cache"
    STORE.reset()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
