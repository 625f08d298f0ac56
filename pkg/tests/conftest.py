"""Pytest configuration and fixtures for ctower tests."""

import os
import tempfile
from pathlib import Path
from typing import Generator

import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from ctower.builder import BuildResult, build
from ctower.config import Config
from ctower.predicate_loader import PredicateLoader
from ctower.ring.tower import Tower

SEED = int(os.environ.get("CTOWER_SEED", "20240607"))

settings.register_profile(
    "ctower",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.register_profile("ctower-quick", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ctower"))


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Provide a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture
def default_config() -> Config:
    return Config()


@pytest.fixture
def loader(default_config: Config) -> PredicateLoader:
    return PredicateLoader(default_config)


@pytest.fixture
def base_tower() -> Tower:
    """Z alone, with the first eight base primes tracked."""
    return Tower(base_prime_window=8)


@pytest.fixture
def loc2() -> Tower:
    """Z localized at p_0 = 2."""
    tower = Tower()
    tower.extend_localize("p:0")
    return tower


@pytest.fixture
def fac5() -> Tower:
    """Z[x, y]/<xy - 5>, generators x:2:0 and y:2:0."""
    tower = Tower()
    tower.extend_factor("p:2", (2, 0))
    return tower


@pytest.fixture
def even_build(loader: PredicateLoader, default_config: Config) -> BuildResult:
    """Six stages of the "even" predicate."""
    return build(loader.get_predicate("even"), 6, default_config)


@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def fac5_tower_file(temp_dir: Path) -> Path:
    path = temp_dir / "fac5.json"
    path.write_text(
        '[{"index": 0, "kind": "base"},'
        ' {"index": 1, "kind": "fac", "parent": 0, "q": "p:2", "gen": [2, 0]}]'
    )
    return path
