"""
Configuration management for the surgeon verification toolkit.
"""

import os
import yaml
from typing import Dict, Any, Optional
from pathlib import Path

from dotenv import load_dotenv


PROJECT_ROOT = Path(__file__).parent.parent.parent


class Config:
    """Configuration manager for the surgery calculus and table auditor."""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_path: Path to configuration file. If None, uses default.
        """
        if config_path is None:
            config_path = os.path.join(PROJECT_ROOT, 'config', 'config.yaml')

        load_dotenv(PROJECT_ROOT / '.env')

        self.config_path = config_path
        self._config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        try:
            with open(self.config_path, 'r') as file:
                loaded = yaml.safe_load(file) or {}
        except FileNotFoundError:
            loaded = {}

        # Missing sections fall back to the built-in defaults
        merged = self._get_default_config()
        for section, values in loaded.items():
            if isinstance(values, dict) and isinstance(merged.get(section), dict):
                merged[section].update(values)
            else:
                merged[section] = values

        return self._override_with_env_vars(merged)

    def _override_with_env_vars(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Override configuration with environment variables."""
        # Logging
        if os.getenv('SURGEON_LOG_LEVEL'):
            config['logging']['level'] = os.getenv('SURGEON_LOG_LEVEL')
        if os.getenv('SURGEON_LOG_FILE') is not None:
            config['logging']['file_path'] = os.getenv('SURGEON_LOG_FILE')

        # Data locations
        if os.getenv('SURGEON_TABLES_DIR'):
            config['data']['tables_dir'] = os.getenv('SURGEON_TABLES_DIR')
        if os.getenv('SURGEON_ALLOWLIST'):
            config['data']['allowlist'] = os.getenv('SURGEON_ALLOWLIST')

        # Audit and certification
        if os.getenv('SURGEON_RANGE'):
            low, _, high = os.getenv('SURGEON_RANGE').partition('..')
            config['audit']['default_range'] = [int(low), int(high)]
        if os.getenv('SURGEON_HK_CONSTANT'):
            config['cusped']['hk_constant'] = float(os.getenv('SURGEON_HK_CONSTANT'))

        # Reports
        if os.getenv('SURGEON_REPORT_FORMAT'):
            config['report']['default_format'] = os.getenv('SURGEON_REPORT_FORMAT')

        return config

    def _get_default_config(self) -> Dict[str, Any]:
        """Return default configuration."""
        return {
            'logging': {
                'level': 'WARNING',
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                'file_path': '',
                'stream': 'stderr'
            },
            'audit': {
                'default_range': [-6, 6],
                'max_workers': 1,
                'tables': [
                    'table2', 'table3', 'cabledgofk', 'cabledgofk2',
                    'appendixB-4', 'appendixB-5', 'appendixB-6',
                    'appendixB-7', 'appendixB-8', 'table8-magic'
                ]
            },
            'data': {
                'tables_dir': 'data/tables',
                'allowlist': 'data/allowlist.yaml',
                'manifolds_dir': 'data/manifolds'
            },
            'cusped': {
                'hk_constant': 7.5832,
                'report_decimals': 6
            },
            'realizability': {
                'extra_search_margin': 2
            },
            'report': {
                'default_format': 'json',
                'csv_columns': [
                    'table', 'row', 'params', 'expected',
                    'computed', 'status', 'oriented', 'note'
                ]
            }
        }

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by key.

        Args:
            key: Configuration key (supports dot notation, e.g., 'cusped.hk_constant')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split('.')
        value = self._config

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value by key.

        Args:
            key: Configuration key (supports dot notation)
            value: Value to set
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def resolve_path(self, key: str) -> Path:
        """Resolve a configured path relative to the project root."""
        path = Path(self.get(key, ''))
        return path if path.is_absolute() else PROJECT_ROOT / path

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return self.get('logging', {})

    def get_audit_config(self) -> Dict[str, Any]:
        """Get table audit configuration."""
        return self.get('audit', {})

    def get_data_config(self) -> Dict[str, Any]:
        """Get dataset location configuration."""
        return self.get('data', {})

    def get_cusped_config(self) -> Dict[str, Any]:
        """Get cusped-manifold configuration."""
        return self.get('cusped', {})

    def get_report_config(self) -> Dict[str, Any]:
        """Get report configuration."""
        return self.get('report', {})

    def to_dict(self) -> Dict[str, Any]:
        """Return configuration as dictionary."""
        return self._config.copy()


# Global configuration instance
config = Config()
