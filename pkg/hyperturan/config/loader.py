"""Reading and writing ``~/.hyperturan/config.json``.

The file holds camelCase keys grouped by section. ``HYPERTURAN_<SECTION>__<FIELD>``
variables fill whatever the file leaves unset when the config is loaded, and are never
written back.
"""

import json
import os
import tempfile
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from loguru import logger

from hyperturan.config.schema import Config

ENV_PREFIX = "HYPERTURAN_"


class ConfigLoadError(RuntimeError):
    """Raised when a persisted config exists but cannot be loaded safely."""

    def __init__(self, path: Path, message: str):
        super().__init__(message)
        self.path = path


def get_config_path() -> Path:
    """Get the default configuration file path."""
    return Path.home() / ".hyperturan" / "config.json"


def env_overrides(environ: Mapping[str, str] | None = None) -> dict[tuple[str, str], str]:
    """(section, field) -> raw value for every recognised HYPERTURAN_ variable."""
    source = os.environ if environ is None else environ
    found: dict[tuple[str, str], str] = {}
    for key, value in source.items():
        if not key.upper().startswith(ENV_PREFIX):
            continue
        section, sep, name = key[len(ENV_PREFIX) :].lower().partition("__")
        field = Config.model_fields.get(section)
        if sep and field is not None and name in field.annotation.model_fields:
            found[(section, name)] = value
    return dict(sorted(found.items()))


def read_config_data(path: Path) -> dict[str, Any]:
    """The raw JSON object stored at `path`."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ConfigLoadError(path, f"Failed to load config: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigLoadError(
            path, f"Failed to load config: expected a JSON object, got {type(data).__name__}"
        )
    return data


def file_config(data: Mapping[str, Any]) -> Config:
    """Config built from `data` and the field defaults alone, ignoring the environment."""
    sections: dict[str, Any] = {}
    for name, field in Config.model_fields.items():
        raw = data.get(name, {})
        if not isinstance(raw, Mapping):
            raise ValueError(f"section {name!r} must be a JSON object")
        sections[name] = field.annotation.model_validate(raw)
    # complete sub-models passed as init values take precedence over env sources
    return Config(**sections)


def load_config(config_path: Path | None = None, *, strict: bool = False) -> Config:
    """
    Load configuration from file, or the defaults when there is none.

    Args:
        config_path: Optional path to config file. Uses default if not provided.
        strict: Raise ConfigLoadError instead of falling back to defaults.

    Returns:
        Loaded configuration object.
    """
    path = config_path or get_config_path()
    if not path.exists():
        return Config()
    try:
        data = read_config_data(path)
        try:
            return Config(**data)
        except (TypeError, ValueError) as exc:
            raise ConfigLoadError(path, f"Failed to load config: {exc}") from exc
    except ConfigLoadError as exc:
        if strict:
            raise
        logger.warning("{} ({}); using defaults", exc, path)
        return Config()


def save_config(config: Config, config_path: Path | None = None) -> Path:
    """Atomically write `config` with camelCase keys; returns the path written."""
    path = config_path or get_config_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(config.model_dump(mode="json", by_alias=True), indent=2, ensure_ascii=False)

    fd, name = tempfile.mkstemp(prefix=".config-", suffix=".json", dir=path.parent)
    tmp = Path(name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        tmp.replace(path)
    except OSError:
        tmp.unlink(missing_ok=True)
        raise
    logger.debug("wrote config {}", path)
    return path
