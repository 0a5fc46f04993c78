"""
Configuration settings for the rollercoaster toolkit.
Loads settings from environment variables (and a local .env file).
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Try to load .env file (for local development)
load_dotenv(override=False)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_env(key: str, default: str = "") -> str:
    """Get a setting from the environment."""
    value = os.getenv(key)
    if value is None or value.strip() == "":
        return default
    return value.strip()


def _get_int(key: str, default: int, minimum: Optional[int] = None) -> int:
    raw = get_env(key, str(default))
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring malformed %s=%r, using %d", key, raw, default)
        return default
    if minimum is not None and value < minimum:
        logger.warning("%s=%d below minimum %d, clamping", key, value, minimum)
        return minimum
    return value


@dataclass
class Settings:
    """Application configuration settings."""

    # Parallelism (bench trials, brute-force enumeration)
    threads: int = 1

    # Randomness
    default_seed: int = 0

    # Logging
    log_level: str = "WARNING"

    # Oracle limits
    bruteforce_max_n: int = 10
    exhaustive_max_n: int = 20

    # Paths
    data_path: str = ""
    report_db_path: str = ""

    def __post_init__(self):
        """Load settings from the environment."""
        self.threads = _get_int("ROLLER_THREADS", os.cpu_count() or 1, minimum=1)
        self.default_seed = _get_int("ROLLER_SEED", 0)
        self.log_level = get_env("ROLLER_LOG_LEVEL", "WARNING").upper()

        self.bruteforce_max_n = _get_int("ROLLER_BRUTEFORCE_MAX_N", 10, minimum=1)
        self.exhaustive_max_n = _get_int("ROLLER_EXHAUSTIVE_MAX_N", 20, minimum=1)

        # Set paths
        base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        self.data_path = get_env("ROLLER_DATA_PATH", os.path.join(base_dir, "data"))
        self.report_db_path = get_env(
            "ROLLER_REPORT_DB", os.path.join(self.data_path, "reports.db")
        )


# Global settings instance
_settings = None


def get_settings() -> Settings:
    """Get settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Forget the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None


def configure_logging(level: Optional[str] = None) -> None:
    """Install a single stderr handler on the root logger.

    Args:
        level: Level name such as "DEBUG"; defaults to Settings.log_level.
    """
    name = (level or get_settings().log_level).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    root = logging.getLogger()
    if not any(getattr(h, "_roller", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._roller = True
        root.addHandler(handler)
    root.setLevel(numeric)
