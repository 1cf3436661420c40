import os
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

logger = logging.getLogger(__name__)

HOME_ENV = "PFAVOID_HOME"
BFILE_DIR_ENV = "PFAVOID_BFILE_DIR"


class AppConfig:
    """Application configuration manager."""

    def __init__(self, app_dir: Optional[Union[str, Path]] = None,
                 config_file: Optional[Union[str, Path]] = None):
        """
        Initialize configuration.

        Args:
            app_dir: Directory for config and result cache; defaults to
                $PFAVOID_HOME, then ~/.pfavoid
            config_file: Alternate config file, e.g. from --config
        """
        if app_dir is None:
            app_dir = os.environ.get(HOME_ENV) or Path.home() / ".pfavoid"
        self.app_dir = Path(app_dir)
        self.config_file = Path(config_file) if config_file else self.app_dir / "config.json"
        self.db_file = self.app_dir / "results.db"

        # Default configuration
        self.defaults = {
            "version": "1.0.0",
            "naive_cap": 8,
            "brute_force_cap": 10,
            "compatible_path_cap": 60,
            "table_max_n": 6,
            "conjecture_max_n": None,  # None keeps each conjecture's own range
            "threads": 1,
            "default_format": "text",  # text, csv, json, markdown or html
            "theme": "dark",  # dark or light
            "color": "auto",  # auto, always or never
            "log_level": "WARNING",
            "use_cache": False,
            "bfile_dir": None,
        }

        self.config: Dict[str, Any] = {}
        self.load()

    def _ensure_app_directory(self):
        """Create application directory if it doesn't exist."""
        try:
            self.app_dir.mkdir(parents=True, exist_ok=True)
            logger.info(f"Application directory: {self.app_dir}")
        except Exception as e:
            logger.error(f"Failed to create app directory: {e}")
            raise

    def load(self):
        """Load configuration from file, layered over the defaults."""
        self.config = self.defaults.copy()
        try:
            if self.config_file.exists():
                with open(self.config_file, 'r') as f:
                    self.config.update(json.load(f))
                logger.info(f"Configuration loaded from {self.config_file}")
            else:
                logger.info("Using default configuration")
        except Exception as e:
            logger.error(f"Failed to load configuration: {e}")
            self.config = self.defaults.copy()

    def save(self):
        """Save configuration to file."""
        try:
            if self.config_file.parent == self.app_dir:
                self._ensure_app_directory()
            else:
                self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w') as f:
                json.dump(self.config, f, indent=4)
            logger.info("Configuration saved")
        except Exception as e:
            logger.error(f"Failed to save configuration: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value."""
        return self.config.get(key, default)

    def set(self, key: str, value: Any):
        """Set configuration value."""
        self.config[key] = value

    def resolve_bfile_dir(self, override: Optional[str] = None) -> Optional[Path]:
        """--bfile-dir, then $PFAVOID_BFILE_DIR, then the bfile_dir key."""
        chosen = override or os.environ.get(BFILE_DIR_ENV) or self.get("bfile_dir")
        return Path(chosen).expanduser() if chosen else None
