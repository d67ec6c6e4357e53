"""
Centralized configuration for the monoid laboratory.

Loads settings from environment variables (or a .env file) and provides
validated access to the bounds, caps and paths used by the library and CLI.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional
from decouple import config
import logging

logger = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class LabConfig:
    """
    Configuration container shared by the CLI and the verify runner.

    Command-line flags override individual fields after loading.
    """

    # Project structure
    project_root: Path
    data_dir: Path
    logs_dir: Path
    presentations_dir: Path
    fixtures_file: Path

    # Presentation engine
    kb_max_rules: int
    kb_max_rule_length: int
    presentation_cap: int

    # Search bounds
    default_nvars: int
    default_maxlen: int
    tau_term_maxlen: int
    vector_limit: int

    # Confluence sweeps
    confluence_samples: int
    confluence_orders: int

    # Runtime
    seed: int
    jobs: int

    # Logging
    log_file: Path
    log_max_bytes: int
    log_backup_count: int
    log_level: str
    enable_file_logging: bool

    @classmethod
    def from_env(cls, project_root: Optional[Path] = None) -> 'LabConfig':
        """
        Load configuration from environment variables.

        Args:
            project_root: Override project root path (default: auto-detect)

        Returns:
            LabConfig instance with all settings loaded
        """
        if project_root is None:
            # This file lives in src/core/, so the project root is 2 levels up
            project_root = Path(__file__).resolve().parent.parent.parent

        data_dir = project_root / 'data'
        logs_dir = project_root / 'logs'
        presentations_dir = project_root / 'presentations'

        enable_file_logging = config('ENABLE_FILE_LOGGING', default=True, cast=bool)
        if enable_file_logging:
            logs_dir.mkdir(exist_ok=True)

        return cls(
            project_root=project_root,
            data_dir=data_dir,
            logs_dir=logs_dir,
            presentations_dir=Path(config('PRESENTATIONS_DIR', default=str(presentations_dir))),
            fixtures_file=data_dir / config('VERIFY_FIXTURES_FILE', default='verify_fixtures.json'),

            kb_max_rules=config('KB_MAX_RULES', default=200, cast=int),
            kb_max_rule_length=config('KB_MAX_RULE_LENGTH', default=12, cast=int),
            presentation_cap=config('PRESENTATION_CAP', default=500, cast=int),

            default_nvars=config('DEFAULT_NVARS', default=3, cast=int),
            default_maxlen=config('DEFAULT_MAXLEN', default=6, cast=int),
            tau_term_maxlen=config('TAU_TERM_MAXLEN', default=8, cast=int),
            vector_limit=config('SUBSTITUTION_VECTOR_LIMIT', default=2_000_000, cast=int),

            confluence_samples=config('CONFLUENCE_SAMPLES', default=1000, cast=int),
            confluence_orders=config('CONFLUENCE_ORDERS', default=10, cast=int),

            seed=config('VERIFY_SEED', default=20240601, cast=int),
            jobs=config('JOBS', default=1, cast=int),

            log_file=logs_dir / config('LOG_FILE', default='monoid_lab.log'),
            log_max_bytes=config('LOG_MAX_BYTES', default=10_485_760, cast=int),
            log_backup_count=config('LOG_BACKUP_COUNT', default=5, cast=int),
            log_level=config('LOG_LEVEL', default='INFO').strip().upper(),
            enable_file_logging=enable_file_logging,
        )

    def validate(self) -> None:
        """
        Check every bound and path setting.

        Raises:
            ValueError: Listing all invalid settings
        """
        positive = {
            'KB_MAX_RULES': self.kb_max_rules,
            'KB_MAX_RULE_LENGTH': self.kb_max_rule_length,
            'PRESENTATION_CAP': self.presentation_cap,
            'DEFAULT_NVARS': self.default_nvars,
            'SUBSTITUTION_VECTOR_LIMIT': self.vector_limit,
            'CONFLUENCE_SAMPLES': self.confluence_samples,
            'CONFLUENCE_ORDERS': self.confluence_orders,
            'JOBS': self.jobs,
            'LOG_MAX_BYTES': self.log_max_bytes,
        }
        problems = [f"{key} must be positive (got {value})" for key, value in positive.items() if value < 1]

        non_negative = {
            'DEFAULT_MAXLEN': self.default_maxlen,
            'TAU_TERM_MAXLEN': self.tau_term_maxlen,
            'LOG_BACKUP_COUNT': self.log_backup_count,
        }
        problems += [f"{key} must not be negative (got {value})" for key, value in non_negative.items() if value < 0]

        if self.log_level not in LOG_LEVELS:
            problems.append(f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)} (got {self.log_level})")
        if not self.presentations_dir.is_dir():
            problems.append(f"PRESENTATIONS_DIR does not exist: {self.presentations_dir}")

        if problems:
            raise ValueError("Invalid configuration: " + "; ".join(problems))

        logger.info("[OK] Configuration validation passed")
