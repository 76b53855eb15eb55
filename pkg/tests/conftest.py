from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from app import create_app
from config import TestingConfig
from models import TrialConfig


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def trial_config() -> TrialConfig:
    return TrialConfig(seed=7, trials=300, max_dim=16)


@pytest.fixture
def cli():
    return create_app(TestingConfig)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def write_file(tmp_path: Path):
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
