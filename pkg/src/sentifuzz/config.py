"""
Configuration: persistent user defaults and per-run settings.
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from .exceptions import ConfigurationError
from .ingest import InputFormat
from .lexicon import LexiconFormat

logger = logging.getLogger(__name__)


class TaggerMode(Enum):
    """Where tags come from."""

    BUILTIN = "builtin"
    PRETAGGED = "pretagged"


class Config:
    """
    Manager for persistent sentifuzz defaults.

    Values live in a JSON file in the user's config directory and are
    overridden by command-line flags.
    """

    DEFAULT_CONFIG: Dict[str, Any] = {
        "lexicon_format": "fixture",
        "lexicon_path": None,
        "stopwords_path": None,
        "weights_path": None,
        "partition_path": None,
        "output_dir": ".",
        "precision": 4,
        "workers": 1,
    }

    def __init__(self, config_file: Optional[Path] = None):
        """
        Initialize configuration manager.

        Args:
            config_file: Path to configuration file. If None, uses default location.
        """
        if config_file is None:
            config_file = Path.home() / ".config" / "sentifuzz" / "config.json"

        self.config_file = Path(config_file)
        self._config: Dict[str, Any] = {}
        self.load()

    def load(self) -> None:
        """Load configuration from file, falling back to defaults."""
        self._config = self.DEFAULT_CONFIG.copy()
        if not self.config_file.exists():
            return
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                stored = json.load(f)
        except (json.JSONDecodeError, OSError) as e:
            logger.warning("Ignoring unreadable config %s: %s", self.config_file, e)
            return
        if not isinstance(stored, dict):
            logger.warning("Ignoring config %s: not a JSON object", self.config_file)
            return
        self._config.update(stored)

    def save(self) -> None:
        """Save current configuration to file."""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self._config, f, indent=2)
        except OSError as e:
            raise ConfigurationError(f"Failed to save configuration: {e}") from e

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self._config[key] = value

    @property
    def lexicon_format(self) -> str:
        return self._config["lexicon_format"]

    @lexicon_format.setter
    def lexicon_format(self, value: str) -> None:
        try:
            self._config["lexicon_format"] = LexiconFormat(value.lower()).value
        except ValueError:
            raise ConfigurationError(f"Unknown lexicon format: {value}") from None

    @property
    def lexicon_path(self) -> Optional[Path]:
        return self._path("lexicon_path")

    @lexicon_path.setter
    def lexicon_path(self, value: Optional[Path]) -> None:
        self._config["lexicon_path"] = None if value is None else str(value)

    @property
    def weights_path(self) -> Optional[Path]:
        return self._path("weights_path")

    @weights_path.setter
    def weights_path(self, value: Optional[Path]) -> None:
        self._config["weights_path"] = None if value is None else str(value)

    @property
    def stopwords_path(self) -> Optional[Path]:
        return self._path("stopwords_path")

    @property
    def partition_path(self) -> Optional[Path]:
        return self._path("partition_path")

    @property
    def output_dir(self) -> Path:
        return Path(self._config["output_dir"]).expanduser()

    @property
    def precision(self) -> int:
        return int(self._config["precision"])

    @property
    def workers(self) -> int:
        return int(self._config["workers"])

    def _path(self, key: str) -> Optional[Path]:
        value = self._config.get(key)
        return None if value is None else Path(value).expanduser()

    def reset(self) -> None:
        """Reset configuration to defaults."""
        self._config = self.DEFAULT_CONFIG.copy()
        self.save()

    def __repr__(self) -> str:
        return f"Config({self._config})"


@dataclass(frozen=True)
class RunConfig:
    """Everything a single pipeline run needs."""

    input_path: Path
    report_path: Path
    input_format: str = InputFormat.TEXT.value
    lexicon_format: str = LexiconFormat.FIXTURE.value
    lexicon_path: Optional[Path] = None
    stopwords_path: Optional[Path] = None
    weights_path: Optional[Path] = None
    partition_path: Optional[Path] = None
    translations_path: Optional[Path] = None
    tagger: str = TaggerMode.BUILTIN.value
    emoticons: bool = False
    drop_objective: bool = False
    pie_path: Optional[Path] = None
    workers: int = 1
    precision: int = 4

    def validate(self) -> None:
        """
        Check modes and referenced files.

        Raises:
            ConfigurationError: On the first problem found
        """
        try:
            InputFormat(self.input_format)
        except ValueError:
            raise ConfigurationError(
                f"Unknown input format: {self.input_format}"
            ) from None
        try:
            lexicon_format = LexiconFormat(self.lexicon_format)
        except ValueError:
            raise ConfigurationError(
                f"Unknown lexicon format: {self.lexicon_format}"
            ) from None
        try:
            tagger = TaggerMode(self.tagger)
        except ValueError:
            raise ConfigurationError(f"Unknown tagger mode: {self.tagger}") from None
        if (
            tagger is TaggerMode.PRETAGGED
            and self.input_format != InputFormat.PRETAGGED.value
        ):
            raise ConfigurationError(
                "The pretagged tagger mode requires --input-format pretagged"
            )
        if lexicon_format is not LexiconFormat.FIXTURE and self.lexicon_path is None:
            raise ConfigurationError(
                f"--lexicon is required for the {lexicon_format.value} format"
            )
        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1")
        if self.precision < 0:
            raise ConfigurationError("precision must not be negative")

        for label, path in (
            ("input", self.input_path),
            ("lexicon", self.lexicon_path),
            ("stopwords", self.stopwords_path),
            ("weights", self.weights_path),
            ("partition", self.partition_path),
            ("translations", self.translations_path),
        ):
            if path is not None and not Path(path).is_file():
                raise ConfigurationError(f"{label} file not found: {path}")
