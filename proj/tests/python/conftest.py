import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("PDEQUAD_SCHEMA", ROOT / "docs" / "report.schema.json")
    with open(path) as f:
        return json.load(f)


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("PDEQUAD_CLI", ROOT / "build" / "pdequad")
    if not os.path.exists(path):
        pytest.skip("CLI binary not built")
    return str(path)
