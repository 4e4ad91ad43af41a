from pathlib import Path
from dataclasses import dataclass, field
from typing import Optional
import logging
import os
import sys

from .errors import ConfigError

# Base configuration
BASE_DIR = Path(os.environ.get("CARPETLAB_HOME", Path.home() / ".carpetlab"))
LOGS_DIR = BASE_DIR / "logs"
FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# Numerical settings
DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64
PRECISION_ENV_VAR = "CARPETLAB_PRECISION"

# Enumeration settings
DEFAULT_MAX_RANK = 4
DEFAULT_ENUMERATION_BUDGET = 5_000_000
DEFAULT_SPECTRUM_GRID = 9

OUTPUT_FORMATS = ("json", "text")

# Logging configuration
LOG_FILE = Path(os.environ["CARPETLAB_LOG_FILE"]) if os.environ.get("CARPETLAB_LOG_FILE") else None
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVEL = getattr(logging, os.environ.get("CARPETLAB_LOG_LEVEL", "WARNING").upper(), logging.WARNING)


def resolve_log_file(log_file: Optional[Path] = None) -> Optional[Path]:
    """Relative log file names live under LOGS_DIR"""
    log_file = log_file or LOG_FILE
    if log_file is None:
        return None
    log_file = Path(log_file)
    return log_file if log_file.is_absolute() else LOGS_DIR / log_file


def configure_logging(level: Optional[int] = None, log_file: Optional[Path] = None) -> None:
    """Configure root logging; stdout stays reserved for reports"""
    handlers = [logging.StreamHandler(sys.stderr)]

    log_file = resolve_log_file(log_file)
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level if level is not None else LOG_LEVEL,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )


@dataclass
class SvgOptions:
    cell_size: float = 0.25  # cell edge width, points
    color_components: bool = False
    kind: str = "tilde"
    fill: str = "#d64545"
    edge_color: str = "#222222"
    title: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("tilde", "square"):
            raise ConfigError(f"Unknown component kind: {self.kind}")
        if self.cell_size <= 0:
            raise ConfigError("cell_size must be positive")


@dataclass
class RunConfig:
    precision_bits: int = DEFAULT_PRECISION_BITS
    max_rank: int = DEFAULT_MAX_RANK
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    output_format: str = "json"
    svg_options: SvgOptions = field(default_factory=SvgOptions)

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ConfigError(f"precision_bits must be at least {MIN_PRECISION_BITS}, got {self.precision_bits}")
        if self.max_rank < 1:
            raise ConfigError(f"max_rank must be at least 1, got {self.max_rank}")
        if self.enumeration_budget < 1:
            raise ConfigError("enumeration_budget must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format: {self.output_format}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Build a config, letting CARPETLAB_PRECISION override the default precision"""
        raw = os.environ.get(PRECISION_ENV_VAR)
        if raw and overrides.get("precision_bits") is None:
            try:
                overrides["precision_bits"] = int(raw)
            except ValueError:
                raise ConfigError(f"{PRECISION_ENV_VAR} must be an integer, got {raw!r}")
        return cls(**{k: v for k, v in overrides.items() if v is not None})
