import pytest
from hypothesis import settings

from globalweyl.algebra import trunc_poly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def A1():
    return trunc_poly(1)


@pytest.fixture
def A2():
    return trunc_poly(2)


@pytest.fixture
def A3():
    return trunc_poly(3)


def pytest_configure(config):
    config._acceptance_lines = {}


@pytest.fixture
def criterion(request):
    """Record ``(number, ok, detail)`` and echo one PASS/FAIL line."""
    def record(number: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        request.config._acceptance_lines[number] = line
        return ok
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
