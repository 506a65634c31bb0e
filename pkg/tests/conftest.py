"""Pytest fixtures and configuration."""

import json
import os
from pathlib import Path

import pytest

from avoid321.components.permutation import Permutation, parse_permutation
from avoid321.components.polynomial import LaurentPoly, parse_poly
from avoid321.config import get_settings, load_settings
from avoid321.models.config import Avoid321Settings

GOLDEN_DIR = Path(__file__).parent / "golden"

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--run-slow", action="store_true", default=False, help="Run the n <= 12 suites"
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Isolate every test from AVOID321_* variables and the settings cache."""
    for key in list(os.environ):
        if key.startswith("AVOID321_"):
            monkeypatch.delenv(key)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings() -> Avoid321Settings:
    """Default settings."""
    return load_settings()


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def closed_form_values() -> dict[int, LaurentPoly]:
    """f_1..f_4 as printed in closed form, parsed."""
    raw = json.loads((GOLDEN_DIR / "closed_form_values.json").read_text())
    return {int(n): parse_poly(text) for n, text in raw.items()}


@pytest.fixture
def worked_example() -> Permutation:
    """The running example 25134."""
    return parse_permutation("25134")
