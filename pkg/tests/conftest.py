import os
import sys

import pytest


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="also run the long computations on rings of order 512 and above")


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: long-running computation, needs --extended")


def extended_enabled(config):
    return config.getoption("--extended") or os.environ.get("RINGCOVER_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if extended_enabled(config):
        return
    skip = pytest.mark.skip(reason="needs --extended or RINGCOVER_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
