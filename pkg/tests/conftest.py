"""PyTest configuration and fixtures."""

from pathlib import Path
from typing import List

import pytest

from etheta.space import FiniteSpace, enumerate_spaces_up_to, library


DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "spaces"


@pytest.fixture
def data_dir() -> Path:
    """Checked-in golden space documents."""
    return DATA_DIR


@pytest.fixture
def example2() -> FiniteSpace:
    """X = {1,2,3}, τ = {∅, X, {1}, {2}, {1,2}}."""
    return library.example2_space()


@pytest.fixture
def example4() -> FiniteSpace:
    """X = {a,b,c,d}, τ = {∅, X, {a}, {c}, {a,c}, {c,d}, {a,c,d}}."""
    return library.example4_space()


@pytest.fixture
def example5() -> FiniteSpace:
    """X = {a,b,c,d}, τ = {∅, X, {a}, {a,b}, {a,b,c}}."""
    return library.example5_space()


@pytest.fixture
def point() -> FiniteSpace:
    return library.point_space()


@pytest.fixture(scope="session")
def small_spaces() -> List[FiniteSpace]:
    """All 34 topologies on at most 3 points, in enumeration order."""
    return list(enumerate_spaces_up_to(3))


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """Minimal YAML config overriding a few verify settings."""
    path = tmp_path / "etheta.yml"
    path.write_text(
        "verify:\n"
        "  max_points: 2\n"
        "  workers: 1\n"
        "  chunk_size: 8\n"
        "output:\n"
        "  format: json-lines\n"
    )
    return path
