import json
from pathlib import Path

import pytest

from latcayley import from_vertices, load_polytope

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_fixture(name: str):
    return load_polytope(fixture_path(name))


def all_fixture_names() -> list[str]:
    return sorted(p.stem for p in FIXTURES.glob("*.json"))


@pytest.fixture(scope="session")
def unit_square():
    return load_fixture("unit_square")


@pytest.fixture(scope="session")
def unit_cube():
    return load_fixture("unit_cube")


@pytest.fixture(scope="session")
def simplex_2d():
    return load_fixture("simplex_2d")


@pytest.fixture(scope="session")
def reeve():
    return load_fixture("reeve")


@pytest.fixture(scope="session")
def segment():
    # [0, 3] on the line
    return load_fixture("segment")


def seg(a, b):
    return from_vertices([a, b])


def read_json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))
