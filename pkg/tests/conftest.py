import os

import pytest

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SPIRALWQO_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="set SPIRALWQO_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion(request):
    """Record one acceptance verdict, print it, then assert it."""
    lines = request.config.stash[ACCEPTANCE_KEY]

    def check(number, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}" + (f": {detail}" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
