"""
Run configuration: presets, JSON config files and command-line overrides.

Resolution order is defaults, then the config file, then explicit flags. A preset fixes its
population parameters; any file or flag value that contradicts it is rejected.
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src.config.errors import ConfigurationError
from src.config.settings import OUTPUT_DIR, PRESETS
from src.evolve.config import GAConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    ga: GAConfig
    out_dir: Path = OUTPUT_DIR
    preset: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Resolved parameters as echoed to run.json (output location excluded)."""
        return {"preset": self.preset, **self.ga.to_dict()}


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Raises:
        ConfigurationError: If the file is unreadable or not a JSON object
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read config file {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigurationError(f"Config file {path} must contain a JSON object")
    return data


def resolve_run_config(
    preset: Optional[str] = None,
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
    out_dir: Union[str, Path] = OUTPUT_DIR,
) -> RunConfig:
    """
    Merge defaults, config file, flags and preset into a validated RunConfig.

    Args:
        preset: Optional preset name (case1, case2, case3)
        config_path: Optional JSON document mirroring GAConfig field names
        overrides: Flag values; None entries are ignored
        out_dir: Output directory

    Raises:
        ConfigurationError: For unknown presets, unreadable files, preset conflicts or
            invalid parameters
    """
    values: Dict[str, Any] = {}
    if config_path is not None:
        values.update(load_config_file(config_path))
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})

    if preset is not None:
        if preset not in PRESETS:
            raise ConfigurationError(
                f"Unknown preset {preset!r}; expected one of {', '.join(sorted(PRESETS))}"
            )
        for key, value in PRESETS[preset].items():
            if key in values and values[key] != value:
                raise ConfigurationError(
                    f"Preset {preset} sets {key}={value} but {values[key]} was also given"
                )
            values[key] = value

    run = RunConfig(ga=GAConfig.from_dict(values), out_dir=Path(out_dir), preset=preset)
    logger.debug(f"Resolved run config: {run.to_dict()}")
    return run
