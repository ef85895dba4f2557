"""Experiment profile and valence table loader.

Version: v2
Last updated: Per-command experiment profiles and named valence tables
"""

import yaml
from pathlib import Path
from typing import Dict, Any, Optional
from rich.console import Console

console = Console(stderr=True)

PROFILES_FILE = "experiment_profiles.yaml"
VALENCE_TABLES_FILE = "valence_tables.yaml"


class ProfileLoader:
    """Load experiment profiles and valence tables from the config directory."""

    def __init__(self, config_dir: Optional[Path] = None):
        """Initialize profile loader with config directory."""
        self.config_dir = Path(config_dir) if config_dir else Path("config")
        self._profiles = None
        self._tables = None

    def _read_yaml(self, filename: str) -> Optional[Dict[str, Any]]:
        path = self.config_dir / filename
        if not path.exists():
            console.print(f"[yellow]⚠️  Config file not found: {path}, using built-in defaults[/yellow]")
            return None
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            console.print(f"[red]❌ Error loading {path}: {e}[/red]")
            return None
        if not isinstance(data, dict):
            console.print(f"[red]❌ {path} must contain a mapping[/red]")
            return None
        return data

    def load_profiles(self) -> Dict[str, Any]:
        """Load experiment profiles from YAML file."""
        if self._profiles is None:
            self._profiles = self._read_yaml(PROFILES_FILE) or self._get_default_profiles()
        return self._profiles

    def load_valence_tables(self) -> Dict[str, Dict[str, int]]:
        if self._tables is None:
            data = self._read_yaml(VALENCE_TABLES_FILE) or {}
            self._tables = data.get("tables") or {"core": {"C": 4, "N": 3, "O": 2, "F": 1}}
        return self._tables

    def get_profile_settings(self, profile_name: str) -> Optional[Dict[str, Any]]:
        """Get settings for a specific profile."""
        profiles = self.load_profiles().get("profiles", {})

        if profile_name in profiles:
            return profiles[profile_name]

        console.print(f"[yellow]⚠️  Profile '{profile_name}' not found[/yellow]")
        return None

    def get_default_settings(self, command: str) -> Dict[str, Any]:
        """Flag defaults for one command."""
        defaults = self.load_profiles().get("flag_defaults", {})
        if command in defaults:
            return dict(defaults[command])
        return dict(self._get_default_profiles()["flag_defaults"].get(command, {}))

    def list_available_profiles(self) -> Dict[str, str]:
        """Get list of available profiles with descriptions."""
        profiles = self.load_profiles().get("profiles", {})
        return {
            name: settings.get("description", "No description")
            for name, settings in profiles.items()
        }

    def apply_profile_to_settings(
        self, base_settings: Dict[str, Any], profile_name: str, command: str
    ) -> Dict[str, Any]:
        """Apply a profile's section for ``command`` to base settings."""
        profile_settings = self.get_profile_settings(profile_name)
        if profile_settings:
            updated_settings = base_settings.copy()
            updated_settings.update(profile_settings.get(command, {}) or {})
            return updated_settings

        return base_settings

    def resolve_settings(
        self, command: str, profile_name: Optional[str], overrides: Dict[str, Any]
    ) -> Dict[str, Any]:
        """flag_defaults -> profile -> explicit flags (None means not given)."""
        settings = self.get_default_settings(command)
        if profile_name:
            settings = self.apply_profile_to_settings(settings, profile_name, command)
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return settings

    def _get_default_profiles(self) -> Dict[str, Any]:
        """Get hardcoded default profiles if file doesn't exist."""
        return {
            "profiles": {
                "default": {
                    "description": "Mutation and sampling runs at full size",
                    "mutate": {"k": 1, "trials": 10000},
                    "sample": {"count": 10000, "min_len": 1, "max_len": 20},
                },
                "quick": {
                    "description": "Small runs for smoke checks",
                    "mutate": {"trials": 500},
                    "sample": {"count": 500},
                },
            },
            "flag_defaults": {
                "mutate": {"rep": "selfies", "k": 1, "trials": 10000},
                "sample": {"count": 10000, "min_len": 1, "max_len": 20, "patience": 0},
            },
        }
