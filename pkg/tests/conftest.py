import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from dominoflip import Region, tiling_from_json

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

FIXTURES = Path(__file__).parent / "fixtures"


def load_tiling(name):
    with open(FIXTURES / name, "r", encoding="utf-8") as fh:
        return tiling_from_json(json.load(fh))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def region_grid(w, h, mask):
    """Small helper for literal regions in tests: '#' marks a cell,
    rows listed top to bottom."""
    rows = mask.split()
    assert len(rows) == h and all(len(r) == w for r in rows)
    cells = [(x, h - 1 - y) for y, row in enumerate(rows)
             for x, ch in enumerate(row) if ch == "#"]
    return Region(cells)
