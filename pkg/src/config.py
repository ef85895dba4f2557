"""Configuration management for valence-grammar.

Version: v2
Last updated: Grammar source, worker and seed settings from the environment
"""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Config(BaseModel):
    """Application configuration."""

    # Grammar
    grammar: str = Field(default="chem", description="Default grammar: chem, quantum or a JSON path")
    config_dir: Path = Field(default=Path("config"), description="Directory with YAML profiles")

    # Execution
    workers: int = Field(default=1, description="Worker threads for batch records and trials")
    seed: int = Field(default=0, description="Default random seed")
    batch_size: int = Field(default=256, description="Records per streaming chunk")

    # Application Settings
    log_level: str = Field(default="INFO", description="Logging level")

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        # Load .env file if it exists
        env_path = Path(".env")
        if env_path.exists():
            load_dotenv(env_path)

        return cls(
            grammar=os.getenv("VALENCE_GRAMMAR", "chem"),
            config_dir=Path(os.getenv("VALENCE_CONFIG_DIR", "config")),
            workers=_int_env("VALENCE_WORKERS", 1),
            seed=_int_env("VALENCE_SEED", 0),
            batch_size=_int_env("VALENCE_BATCH_SIZE", 256),
            log_level=os.getenv("LOG_LEVEL", "INFO"),
        )

    def validate_settings(self) -> None:
        """Validate settings, naming every invalid one."""
        problems = []

        if self.workers < 1:
            problems.append(f"VALENCE_WORKERS must be >= 1 (got {self.workers})")
        if self.batch_size < 1:
            problems.append(f"VALENCE_BATCH_SIZE must be >= 1 (got {self.batch_size})")
        if self.seed < 0:
            problems.append(f"VALENCE_SEED must be >= 0 (got {self.seed})")
        if self.log_level.upper() not in LOG_LEVELS:
            problems.append(f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)} (got {self.log_level})")

        if problems:
            raise ValueError(f"Invalid configuration: {'; '.join(problems)}")


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning("%s=%r is not an integer, using %d", name, value, default)
        return default


# Global config instance
config = Config.from_env()
