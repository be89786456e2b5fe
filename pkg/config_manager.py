#!/usr/bin/env python3
"""
Configuration Manager for the moduli lab
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from libs.lab_config import LabConfig

logger = logging.getLogger(__name__)

LAB_KEYS = {
    "seed": "lab.seed",
    "trials": "lab.trials",
    "rational_bound": "lab.rational_bound",
    "surface_retries": "lab.surface_retries",
    "commutator_trials": "lab.commutator_trials",
    "quiver_retries": "lab.quiver_retries",
    "max_witness_factors": "search.max_witness_factors",
    "max_subquiver_arrows": "search.max_subquiver_arrows",
    "n_jobs": "batch.n_jobs",
}


class ConfigManager:
    """Configuration manager for loading and managing lab settings"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or os.getenv("CY2_CONFIG", "config.yml")
        self._config: Dict[str, Any] = {}
        self.load_config()

    def load_config(self):
        """Load configuration from YAML file, falling back to built-in defaults"""
        config_file = Path(self.config_path)
        if not config_file.exists():
            self._config = self._get_default_config()
            return
        try:
            with open(config_file, "r") as f:
                self._config = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.warning(f"Could not load {self.config_path}: {e}")
            self._config = self._get_default_config()

    def _get_default_config(self) -> Dict[str, Any]:
        """Defaults mirroring LabConfig"""
        defaults = LabConfig()
        return {
            "lab": {
                "seed": defaults.seed,
                "trials": defaults.trials,
                "rational_bound": defaults.rational_bound,
                "surface_retries": defaults.surface_retries,
                "commutator_trials": defaults.commutator_trials,
                "quiver_retries": defaults.quiver_retries,
            },
            "search": {
                "max_witness_factors": defaults.max_witness_factors,
                "max_subquiver_arrows": defaults.max_subquiver_arrows,
            },
            "batch": {"n_jobs": defaults.n_jobs},
            "logging": {
                "level": "WARNING",
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            },
        }

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value using dot notation"""
        value = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return os.getenv(f"CY2_{key.upper().replace('.', '_')}", default)
        return value

    def set(self, key: str, value: Any):
        """Set configuration value"""
        keys = key.split(".")
        config = self._config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def lab_config(self, **overrides: Any) -> LabConfig:
        """
        LabConfig from the file, with non-None overrides applied last

        Args:
            **overrides: LabConfig field values (e.g. seed from --seed or CY2_SEED)

        Returns:
            Validated LabConfig
        """
        values = {}
        for field, key in LAB_KEYS.items():
            value = self.get(key)
            if value is not None:
                values[field] = value
        values.update({k: v for k, v in overrides.items() if v is not None})
        return LabConfig(**values)

    def validate_config(self) -> Dict[str, Any]:
        """Validate configuration and return status"""
        errors = []
        warnings = []
        for section in ("lab", "search"):
            if section not in self._config:
                warnings.append(f"Missing section '{section}', using defaults")
        try:
            self.lab_config()
        except ValueError as e:
            errors.append(str(e))
        return {"valid": not errors, "errors": errors, "warnings": warnings}

    def is_loaded(self) -> bool:
        """Check if configuration is loaded"""
        return len(self._config) > 0


def get_config(key: str, default: Any = None, config_path: Optional[str] = None) -> Any:
    """Get configuration value"""
    return ConfigManager(config_path).get(key, default)
