"""Runtime configuration for the service and CLI.

Configuration lives in a plain ``key = value`` text file. Blank lines and
``#`` comments are ignored. The file location comes from, in order: an
explicit path argument, the ``PATHREC_CONFIG`` environment variable, or no
file at all (pure defaults). Unknown keys are rejected rather than ignored
so typos fail loudly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

from .data import DEFAULT_MODE_SPEEDS_KMH
from .errors import ConfigError
from .model import DEFAULT_ALPHA, DEFAULT_SMOOTHING

CONFIG_ENV_VAR = "PATHREC_CONFIG"

MODE_SPEED_PREFIX = "mode_speed."


@dataclass(frozen=True)
class AppConfig:
    """Resolved configuration with defaults applied."""

    pois_path: str | None = None
    trajectories_path: str | None = None
    model_path: str | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    alpha: float = DEFAULT_ALPHA
    kappa: float = DEFAULT_SMOOTHING
    neighbourhood_radius_km: float = 1.0
    mode_speeds_kmh: dict[str, float] = field(
        default_factory=lambda: dict(DEFAULT_MODE_SPEEDS_KMH)
    )

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.kappa < 0:
            raise ConfigError(f"kappa must be non-negative, got {self.kappa}")
        if self.neighbourhood_radius_km <= 0:
            raise ConfigError(
                f"neighbourhood_radius_km must be positive, got {self.neighbourhood_radius_km}"
            )
        if not 0 < self.port < 65536:
            raise ConfigError(f"port must lie in [1, 65535], got {self.port}")
        for name, speed in self.mode_speeds_kmh.items():
            if speed <= 0:
                raise ConfigError(f"speed for mode {name!r} must be positive, got {speed}")


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse ``key = value`` lines into a string mapping."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in entries:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _as_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"config key {key!r}: expected a number, got {value!r}") from None


def _as_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"config key {key!r}: expected an integer, got {value!r}") from None


def config_from_entries(entries: dict[str, str], source: str = "<config>") -> AppConfig:
    cfg = AppConfig()
    speeds = dict(cfg.mode_speeds_kmh)
    updates: dict[str, object] = {}
    for key, value in entries.items():
        if key == "pois_path" or key == "trajectories_path" or key == "model_path":
            updates[key] = value
        elif key == "host":
            updates[key] = value
        elif key == "port":
            updates[key] = _as_int(key, value)
        elif key in ("alpha", "kappa", "neighbourhood_radius_km"):
            updates[key] = _as_float(key, value)
        elif key.startswith(MODE_SPEED_PREFIX):
            mode = key[len(MODE_SPEED_PREFIX) :]
            if not mode:
                raise ConfigError(f"{source}: mode speed key {key!r} names no mode")
            speeds[mode] = _as_float(key, value)
        else:
            raise ConfigError(f"{source}: unknown config key {key!r}")
    return replace(cfg, mode_speeds_kmh=speeds, **updates)


def load_config(path: str | None = None) -> AppConfig:
    """Load configuration from ``path``, ``$PATHREC_CONFIG``, or defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return AppConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from None
    return config_from_entries(parse_config_text(text, source=path), source=path)
