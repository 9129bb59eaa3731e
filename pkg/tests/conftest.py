import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("NONREP_STRETCH"):
        return
    skip = pytest.mark.skip(reason="stretch run; set NONREP_STRETCH=1")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "stretch: long exhaustive runs, gated by NONREP_STRETCH")
