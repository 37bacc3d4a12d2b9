import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Expose each phase's outcome on the item so fixtures can report it."""
    outcome = yield
    setattr(item, f"report_{call.when}", outcome.get_result())
