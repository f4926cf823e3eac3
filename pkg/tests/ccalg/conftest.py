import json

import pytest


@pytest.fixture
def unit_bundle():
    """Bundle data for the one-dimensional unit algebra with H = -e.e."""
    return {
        "algebra": {"name": "T", "basis": ["e"], "product": [{"args": [1, 1], "value": ["1"]}]},
        "bimodule": {"name": "U", "basis": ["u"], "regular": True},
        "cocycle": {"arity": 2, "on": "T", "entries": [{"args": [1, 1], "value": ["-1"]}]},
        "operators": {"R": {"matrix": [["1"]]}},
        "cochains": {"id": {"arity": 1, "on": "T", "entries": [{"args": [1], "value": ["1"]}]}},
        "elements": {"e": ["1"]},
    }


@pytest.fixture
def write_bundle(tmp_path):
    """Write bundle data (or raw text) to a file and return its path."""

    def _write(data, name="bundle.json"):
        path = tmp_path / name
        text = data if isinstance(data, str) else json.dumps(data, indent=2)
        path.write_text(text, encoding="utf-8")
        return path

    return _write
