"""Unit tests for experiment profiles and named valence tables."""

import pytest
import yaml

from src.utils.profile_loader import PROFILES_FILE, VALENCE_TABLES_FILE, ProfileLoader


@pytest.fixture
def config_dir(temp_dir):
    profiles = {
        "profiles": {
            "tiny": {"description": "Tiny runs", "sample": {"count": 5, "max_len": 4}},
        },
        "flag_defaults": {"sample": {"count": 100, "min_len": 1, "max_len": 20, "patience": 0}},
    }
    (temp_dir / PROFILES_FILE).write_text(yaml.safe_dump(profiles))
    (temp_dir / VALENCE_TABLES_FILE).write_text(yaml.safe_dump({"tables": {"halo": {"C": 4, "Cl": 1}}}))
    return temp_dir


@pytest.mark.unit
class TestProfileLoader:
    def test_settings_layer_in_order(self, config_dir):
        loader = ProfileLoader(config_dir)
        settings = loader.resolve_settings("sample", "tiny", {"count": 7, "min_len": None})
        assert settings == {"count": 7, "min_len": 1, "max_len": 4, "patience": 0}

    def test_no_profile(self, config_dir):
        settings = ProfileLoader(config_dir).resolve_settings("sample", None, {})
        assert settings["count"] == 100

    def test_unknown_profile_keeps_defaults(self, config_dir):
        settings = ProfileLoader(config_dir).resolve_settings("sample", "missing", {})
        assert settings["max_len"] == 20

    def test_list_profiles(self, config_dir):
        assert ProfileLoader(config_dir).list_available_profiles() == {"tiny": "Tiny runs"}

    def test_valence_tables(self, config_dir):
        assert ProfileLoader(config_dir).load_valence_tables() == {"halo": {"C": 4, "Cl": 1}}

    def test_missing_files_use_builtin_defaults(self, temp_dir):
        loader = ProfileLoader(temp_dir / "nowhere")
        assert loader.get_default_settings("mutate") == {"rep": "selfies", "k": 1, "trials": 10000}
        assert loader.load_valence_tables()["core"] == {"C": 4, "N": 3, "O": 2, "F": 1}

    def test_flag_defaults_fall_back_per_command(self, config_dir):
        assert ProfileLoader(config_dir).get_default_settings("mutate")["trials"] == 10000

    def test_malformed_yaml(self, temp_dir):
        (temp_dir / PROFILES_FILE).write_text("profiles: [unclosed\n")
        assert "quick" in ProfileLoader(temp_dir).list_available_profiles()

    def test_shipped_profiles(self):
        loader = ProfileLoader()
        assert loader.resolve_settings("sample", "robustness", {})["count"] == 100000
        assert "extended" in loader.load_valence_tables()
