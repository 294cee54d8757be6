import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("SIGTORUS_CLI", str(ROOT / "build" / "tools" / "sigtorus"))
    if not os.path.exists(path):
        pytest.skip("sigtorus CLI not built")
    return path
