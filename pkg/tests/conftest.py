import pytest

_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_KEY] = []


@pytest.fixture
def acceptance_report(request):
    """Collects one summary line per acceptance criterion."""
    return request.config.stash[_KEY].append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_KEY]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
