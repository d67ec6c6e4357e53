# tests/test_config.py
"""
Tests for configuration loading and validation.
"""
import pytest

from src.core.config import LabConfig


def test_config_from_env_loads_successfully(lab_config, temp_dir):
    """Test that configuration loads from environment variables."""
    assert lab_config.project_root == temp_dir
    assert lab_config.fixtures_file == temp_dir / 'data' / 'verify_fixtures.json'
    assert lab_config.confluence_samples == 50
    assert lab_config.enable_file_logging is False


def test_config_defaults(monkeypatch, temp_dir):
    """Test the documented defaults when nothing is set."""
    for key in ('KB_MAX_RULES', 'JOBS', 'VERIFY_SEED', 'TAU_TERM_MAXLEN'):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv('ENABLE_FILE_LOGGING', 'False')

    config = LabConfig.from_env(project_root=temp_dir)

    assert config.kb_max_rules == 200
    assert config.jobs == 1
    assert config.seed == 20240601
    assert config.tau_term_maxlen == 8


def test_file_logging_creates_logs_dir(monkeypatch, temp_dir):
    monkeypatch.setenv('ENABLE_FILE_LOGGING', 'True')
    config = LabConfig.from_env(project_root=temp_dir)
    assert config.logs_dir.is_dir()


def test_config_validation_passes_with_valid_data(lab_config):
    """Test that validation passes with valid configuration."""
    lab_config.validate()


def test_config_validation_lists_every_problem(lab_config):
    lab_config.jobs = 0
    lab_config.default_maxlen = -1
    lab_config.log_level = 'LOUD'

    with pytest.raises(ValueError) as error:
        lab_config.validate()

    message = str(error.value)
    assert 'JOBS must be positive' in message
    assert 'DEFAULT_MAXLEN must not be negative' in message
    assert 'LOG_LEVEL must be one of' in message


def test_config_validation_checks_presentations_dir(lab_config, temp_dir):
    lab_config.presentations_dir = temp_dir / 'nowhere'
    with pytest.raises(ValueError, match="PRESENTATIONS_DIR does not exist"):
        lab_config.validate()


def test_log_level_is_normalised(monkeypatch, temp_dir):
    monkeypatch.setenv('ENABLE_FILE_LOGGING', 'False')
    monkeypatch.setenv('LOG_LEVEL', ' debug ')
    assert LabConfig.from_env(project_root=temp_dir).log_level == 'DEBUG'
