"""
Configuration management for the varietas workbench.
"""

import os
import yaml
import logging
from typing import Dict, Any, Optional
from dataclasses import dataclass, field

from varietas.enums import MeasurementMode, VarietasConstants

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)


@dataclass
class LimitsConfig:
    """Bounds on exhaustive constructions."""

    max_lattice_generators: int = VarietasConstants.MAX_FREE_GENERATORS
    max_margin_length: int = VarietasConstants.MAX_MARGIN_LENGTH
    max_word_length: int = VarietasConstants.ORACLE_WORD_LENGTH

    def __post_init__(self):
        for name in ("max_lattice_generators", "max_margin_length", "max_word_length"):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"limits.{name} must be non-negative")


@dataclass
class CorpusConfig:
    """Sizes and seed of the generated verification corpora."""

    seed: int = 0
    random_bimodules: int = 200
    random_quotients: int = 100
    random_regexes: int = 20
    exchange_samples: int = 200

    def __post_init__(self):
        for name in ("random_bimodules", "random_quotients", "random_regexes", "exchange_samples"):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"corpus.{name} must be non-negative")


@dataclass
class QfaConfig:
    """Quantum automaton simulation settings."""

    tolerance: float = VarietasConstants.QFA_TOLERANCE
    default_mode: MeasurementMode = MeasurementMode.SUBSPACE

    def __post_init__(self):
        if isinstance(self.default_mode, str):
            try:
                self.default_mode = MeasurementMode(self.default_mode)
            except ValueError:
                raise ConfigurationError(
                    f"qfa.default_mode must be one of {[m.value for m in MeasurementMode]}"
                ) from None
        if not self.tolerance > 0:
            raise ConfigurationError("qfa.tolerance must be positive")


@dataclass
class WorkbenchConfig:
    """Workbench configuration data class."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    qfa: QfaConfig = field(default_factory=QfaConfig)
    log_level: str = "INFO"
    default_symbol: str = VarietasConstants.DEFAULT_SYMBOL

    def __post_init__(self):
        """Validate configuration after initialization."""
        self.log_level = str(self.log_level).upper()
        if self.log_level not in logging.getLevelNamesMapping():
            raise ConfigurationError(f"Unknown log level {self.log_level!r}")
        symbol = self.default_symbol
        if len(symbol) != 1 or symbol in VarietasConstants.RESERVED_SYMBOLS:
            raise ConfigurationError(
                f"default_symbol must be a single non-reserved character, got {symbol!r}"
            )


SECTIONS = {"limits": LimitsConfig, "corpus": CorpusConfig, "qfa": QfaConfig}


class ConfigManager:
    """Manages workbench configuration from environment variables and YAML files."""

    def __init__(self, config_path: str = "config.yaml"):
        """Initialize configuration manager."""
        self.config_path = config_path
        self._config: Optional[WorkbenchConfig] = None

    def load_config(self) -> WorkbenchConfig:
        """Load and validate configuration."""
        if self._config is not None:
            return self._config

        yaml_config = self._load_yaml_config()
        env_config = self._load_env_config()

        # Merge per section (env takes precedence)
        merged: Dict[str, Any] = {}
        for key in set(yaml_config) | set(env_config):
            base, override = yaml_config.get(key), env_config.get(key)
            if isinstance(base, dict) and isinstance(override, dict):
                merged[key] = {**base, **override}
            else:
                merged[key] = override if key in env_config else base

        sections = {}
        for name, section in SECTIONS.items():
            data = merged.pop(name, None) or {}
            if not isinstance(data, dict):
                raise ConfigurationError(f"Section {name!r} must be a mapping")
            try:
                sections[name] = section(**data)
            except TypeError as e:
                raise ConfigurationError(f"Invalid keys in section {name!r}: {e}") from e

        try:
            self._config = WorkbenchConfig(**merged, **sections)
        except TypeError as e:
            raise ConfigurationError(f"Invalid configuration keys: {e}") from e

        logger.info("Configuration loaded successfully")
        return self._config

    def _load_yaml_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        try:
            with open(self.config_path, "r", encoding="utf-8") as file:
                config = yaml.safe_load(file) or {}

            logger.info(f"YAML configuration loaded from {self.config_path}")
            return config

        except FileNotFoundError:
            logger.warning(f"Configuration file {self.config_path} not found")
            return {}
        except yaml.YAMLError as e:
            logger.error(f"Error parsing YAML configuration: {e}")
            raise ConfigurationError(f"Invalid YAML in {self.config_path}") from e

    def _load_env_config(self) -> Dict[str, Any]:
        """Load configuration from environment variables."""
        config: Dict[str, Any] = {}

        if max_lattice := os.getenv("VARIETAS_MAX_LATTICE"):
            try:
                config.setdefault("limits", {})["max_lattice_generators"] = int(max_lattice)
            except ValueError:
                logger.warning(f"Invalid VARIETAS_MAX_LATTICE value: {max_lattice}")

        if max_margin := os.getenv("VARIETAS_MAX_MARGIN_LENGTH"):
            try:
                config.setdefault("limits", {})["max_margin_length"] = int(max_margin)
            except ValueError:
                logger.warning(f"Invalid VARIETAS_MAX_MARGIN_LENGTH value: {max_margin}")

        if seed := os.getenv("VARIETAS_SEED"):
            try:
                config.setdefault("corpus", {})["seed"] = int(seed)
            except ValueError:
                logger.warning(f"Invalid VARIETAS_SEED value: {seed}")

        if log_level := os.getenv("VARIETAS_LOG_LEVEL"):
            config["log_level"] = log_level

        logger.debug("Environment configuration loaded")
        return config

    @property
    def config(self) -> WorkbenchConfig:
        """Get the current configuration."""
        if self._config is None:
            return self.load_config()
        return self._config
