import random
import sys

import pytest
from hypothesis import HealthCheck, settings

import audit  # noqa: F401  start recording bases before any test runs

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_collection_modifyitems(items):
    # acceptance checks go last so the basis audit sees the whole session
    items.sort(key=lambda it: it.module.__name__ == "test_acceptance")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
