"""Shared fixtures for the varietas test suite."""

import pytest
import yaml

from varietas.bimodule import diamond_example
from varietas.regex import compile_regex
from workbench.config import CorpusConfig, WorkbenchConfig


@pytest.fixture
def even():
    """(aa)* over {a}."""
    return compile_regex("(aa)*")


@pytest.fixture
def odd():
    return compile_regex("a(aa)*")


@pytest.fixture
def alternating():
    """(ab)* over {a, b}."""
    return compile_regex("(ab)*")


@pytest.fixture
def diamond():
    return diamond_example()


@pytest.fixture
def small_config():
    """Configuration with corpora small enough for unit tests."""
    return WorkbenchConfig(
        corpus=CorpusConfig(
            seed=0,
            random_bimodules=6,
            random_quotients=6,
            random_regexes=4,
            exchange_samples=25,
        )
    )


@pytest.fixture
def config_file(tmp_path, monkeypatch):
    """A config.yaml with small corpora and no VARIETAS_* overrides."""
    for name in (
        "VARIETAS_MAX_LATTICE",
        "VARIETAS_MAX_MARGIN_LENGTH",
        "VARIETAS_SEED",
        "VARIETAS_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    path = tmp_path / "config.yaml"
    path.write_text(
        yaml.dump(
            {
                "log_level": "WARNING",
                "corpus": {
                    "seed": 0,
                    "random_bimodules": 6,
                    "random_quotients": 6,
                    "random_regexes": 4,
                    "exchange_samples": 25,
                },
                "limits": {"max_margin_length": 8},
            }
        ),
        encoding="utf-8",
    )
    return str(path)
