"""Unit tests for environment configuration."""

from pathlib import Path

import pytest

from src.config import Config

ENV_VARS = ("VALENCE_GRAMMAR", "VALENCE_CONFIG_DIR", "VALENCE_WORKERS", "VALENCE_SEED", "VALENCE_BATCH_SIZE", "LOG_LEVEL")


@pytest.fixture
def clean_env(monkeypatch, temp_dir):
    """No valence variables and no .env file in the working directory."""
    for name in ENV_VARS:
        # load_dotenv may write these; registering them first lets monkeypatch undo it
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(temp_dir)
    return monkeypatch


@pytest.mark.unit
class TestConfig:
    def test_defaults(self, clean_env):
        config = Config.from_env()
        assert config.grammar == "chem"
        assert config.config_dir == Path("config")
        assert (config.workers, config.seed, config.batch_size) == (1, 0, 256)
        assert config.log_level == "INFO"

    def test_environment_overrides(self, clean_env):
        clean_env.setenv("VALENCE_GRAMMAR", "quantum")
        clean_env.setenv("VALENCE_WORKERS", "4")
        clean_env.setenv("VALENCE_SEED", "42")
        clean_env.setenv("LOG_LEVEL", "DEBUG")
        config = Config.from_env()
        assert (config.grammar, config.workers, config.seed, config.log_level) == ("quantum", 4, 42, "DEBUG")

    def test_dotenv_file(self, clean_env, temp_dir):
        (temp_dir / ".env").write_text("VALENCE_BATCH_SIZE=8\n")
        assert Config.from_env().batch_size == 8

    def test_non_integer_falls_back(self, clean_env):
        clean_env.setenv("VALENCE_WORKERS", "many")
        assert Config.from_env().workers == 1

    def test_validate_settings_names_every_problem(self):
        config = Config(workers=0, batch_size=0, log_level="LOUD")
        with pytest.raises(ValueError) as excinfo:
            config.validate_settings()
        message = str(excinfo.value)
        assert "VALENCE_WORKERS" in message
        assert "VALENCE_BATCH_SIZE" in message
        assert "LOG_LEVEL" in message

    def test_valid_settings(self):
        Config(workers=2, log_level="debug").validate_settings()
